"""Stateless HTTP facade over evaluation, weighting, and sensitivity.

Every handler is a pure function of the request body; responses for a fixed
body are byte-identical across calls. Malformed JSON is a 400, domain
violations are a 422, both with ``{"error": code, "message": text}`` bodies.
"""

from __future__ import annotations

import json
from typing import Any, Callable

from fastapi import FastAPI, Request, Response

from . import __version__
from .ahp import aggregate_judgments, consistency, derive_weights, PairwiseComparisonMatrix
from .aras import evaluate
from .errors import McdaError, ParseError
from .io_formats import (
    round12,
    matrix_from_json_dict,
    result_to_json_dict,
)
from .model import PipelineMode, WeightVector
from .sensitivity import SensitivityReport, weight_sweep


def _json_response(doc: Any, status_code: int = 200) -> Response:
    return Response(
        content=json.dumps(doc, indent=2, ensure_ascii=False) + "\n",
        status_code=status_code,
        media_type="application/json",
    )


def _error_response(code: str, message: str, status_code: int) -> Response:
    return _json_response({"error": code, "message": message}, status_code)


async def _read_body(request: Request) -> Any:
    raw = await request.body()
    if not raw:
        raise _BadRequest("empty request body")
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise _BadRequest(f"malformed JSON: {exc.msg}") from None


class _BadRequest(Exception):
    """Request-shape problem: reported as 400 before domain logic runs."""


def _field(body: Any, name: str) -> Any:
    if not isinstance(body, dict) or name not in body:
        raise _BadRequest(f"missing field {name!r}")
    return body[name]


def _parse_mode(body: dict) -> PipelineMode:
    token = body.get("mode", PipelineMode.STANDARD_ARAS.value)
    try:
        return PipelineMode.from_token(str(token))
    except ValueError as exc:
        raise _BadRequest(str(exc)) from None


def _parse_weights(value: Any) -> WeightVector:
    try:
        return WeightVector(float(w) for w in value)
    except (TypeError, ValueError) as exc:
        raise _BadRequest(f"bad weights: {exc}") from None


def sensitivity_to_json_dict(report: SensitivityReport) -> dict[str, Any]:
    return {
        "criterion": report.criterion,
        "baseline_weight": round12(report.baseline_weight),
        "grid": [round12(g) for g in report.grid],
        "k_trajectories": {
            name: [round12(k) for k in traj]
            for name, traj in zip(report.alternatives, report.k_trajectories)
        },
        "rank_change_points": list(report.rank_change_points),
        "stability_interval": [round12(v) for v in report.stability_interval],
    }


def consistency_to_json_dict(report) -> dict[str, Any]:
    return {
        "lambda_max": round12(report.lambda_max),
        "consistency_index": round12(report.consistency_index),
        "random_index": round12(report.random_index),
        "consistency_ratio": round12(report.consistency_ratio),
        "acceptable": report.acceptable,
    }


def create_app(cors_origin: str | None = None) -> FastAPI:
    app = FastAPI(title="arasrank", version=__version__, docs_url=None, redoc_url=None)

    if cors_origin:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=[cors_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    def guarded(handler: Callable[[Any], Response]) -> Callable[[Request], Any]:
        async def run(request: Request) -> Response:
            try:
                body = await _read_body(request)
                return handler(body)
            except _BadRequest as exc:
                return _error_response("ParseError", str(exc), 400)
            except ParseError as exc:
                return _error_response(exc.code, str(exc), 400)
            except McdaError as exc:
                return _error_response(exc.code, str(exc), 422)

        return run

    def do_evaluate(body: Any) -> Response:
        matrix = matrix_from_json_dict(_field(body, "matrix"))
        weights = _parse_weights(_field(body, "weights"))
        result = evaluate(matrix, weights, _parse_mode(body))
        return _json_response(result_to_json_dict(result))

    def do_ahp_weights(body: Any) -> Response:
        grids = _field(body, "matrices")
        if not isinstance(grids, list) or not grids:
            raise _BadRequest("'matrices' must be a non-empty array of square grids")
        matrices = []
        for grid in grids:
            try:
                matrices.append(PairwiseComparisonMatrix(grid))
            except (TypeError, ValueError) as exc:
                raise _BadRequest(f"bad judgment grid: {exc}") from None
        merged = matrices[0] if len(matrices) == 1 else aggregate_judgments(matrices)
        weights = derive_weights(merged)
        report = consistency(merged, weights)
        return _json_response(
            {
                "weights": [round12(w) for w in weights],
                "consistency": consistency_to_json_dict(report),
            }
        )

    def do_sensitivity(body: Any) -> Response:
        matrix = matrix_from_json_dict(_field(body, "matrix"))
        weights = _parse_weights(_field(body, "weights"))
        criterion = str(_field(body, "criterion"))
        grid_field = _field(body, "grid")
        try:
            grid = [float(g) for g in grid_field]
        except (TypeError, ValueError) as exc:
            raise _BadRequest(f"bad grid: {exc}") from None
        report = weight_sweep(matrix, weights, _parse_mode(body), criterion, grid)
        return _json_response(sensitivity_to_json_dict(report))

    app.add_api_route("/api/evaluate", guarded(do_evaluate), methods=["POST"])
    app.add_api_route("/api/ahp/weights", guarded(do_ahp_weights), methods=["POST"])
    app.add_api_route("/api/sensitivity", guarded(do_sensitivity), methods=["POST"])

    async def health() -> Response:
        return _json_response({"status": "ok", "version": __version__})

    app.add_api_route("/api/health", health, methods=["GET"])
    return app


def serve(port: int = 8000, bind: str = "127.0.0.1", cors_origin: str | None = None) -> None:
    """Run the service with uvicorn; binds to loopback unless told otherwise."""
    import uvicorn

    uvicorn.run(create_app(cors_origin), host=bind, port=port, log_level="info")
