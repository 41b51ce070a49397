"""Command-line front door.

Subcommands: ``rank`` (CSV in, ResultJson out), ``ahp`` (pairwise CSV in,
weights + consistency out, exit 3 on inconsistency), ``sweep`` (sensitivity
JSON), ``report`` (figures + delimited output into a directory), ``serve``
(HTTP service). Exit codes: 0 success, 2 input/parse error, 3 consistency
rejection. Errors go to stderr as one ``error_code: message`` line.
Identical argv and input files produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .ahp import CR_ACCEPTANCE_THRESHOLD, aggregate_judgments, consistency, derive_weights
from .aras import evaluate
from .errors import McdaError, ParseError
from .io_formats import (
    round12,
    parse_decision_csv,
    parse_pairwise_csv,
    serialize_result_json,
)
from .model import DecisionMatrix, PipelineMode, WeightVector
from .sensitivity import weight_sweep

MODE_ENV_VAR = "MCDA_DEFAULT_MODE"

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_INCONSISTENT = 3


def _default_mode() -> str:
    token = os.environ.get(MODE_ENV_VAR)
    if token is None:
        return PipelineMode.STANDARD_ARAS.value
    try:
        return PipelineMode.from_token(token).value
    except ValueError:
        raise ParseError(
            f"{MODE_ENV_VAR} is {token!r}; expected 'paper-2011' or 'standard'"
        ) from None


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None
    except UnicodeDecodeError:
        raise ParseError(f"{path} is not valid UTF-8") from None


def _load_matrix(args) -> tuple[DecisionMatrix, WeightVector]:
    matrix, csv_weights = parse_decision_csv(_read_file(args.input))
    if args.weights:
        weights = _load_weights(args.weights, matrix.n_criteria)
    elif csv_weights is not None:
        weights = csv_weights
    else:
        raise ParseError(f"{args.input} has no weight row and no --weights file was given")
    return matrix, weights


def _load_weights(path: str, n: int) -> WeightVector:
    text = _read_file(path)
    if path.endswith(".json"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc.msg}", line=exc.lineno, column=exc.colno) from None
        if isinstance(doc, dict):
            doc = doc.get("weights")
        if not isinstance(doc, list):
            raise ParseError(f"{path}: expected a JSON array of {n} weights")
        try:
            return WeightVector(float(w) for w in doc)
        except (TypeError, ValueError):
            raise ParseError(f"{path}: weights must be numbers") from None
    # CSV: one line of reals, optionally prefixed with a 'weight' label
    tokens = [t for t in text.replace("\n", ",").split(",") if t.strip()]
    if tokens and tokens[0].strip().lower() == "weight":
        tokens = tokens[1:]
    try:
        return WeightVector(float(t) for t in tokens)
    except ValueError:
        raise ParseError(f"{path}: weights must be numbers") from None


def _mode_of(args) -> PipelineMode:
    return PipelineMode.from_token(args.mode)


def _print_json(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")


def cmd_rank(args) -> int:
    matrix, weights = _load_matrix(args)
    result = evaluate(matrix, weights, _mode_of(args))
    text = serialize_result_json(result)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    elif args.pretty:
        _print_ranking_table(result)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _print_ranking_table(result) -> None:
    rows = [("rank", "alternative", "S", "K")]
    by_rank = {name: i + 1 for i, name in enumerate(result.ranking)}
    ordered = sorted(range(len(result.alternatives)), key=lambda i: by_rank[result.alternatives[i]])
    for i in ordered:
        rows.append(
            (
                str(by_rank[result.alternatives[i]]),
                result.alternatives[i],
                f"{result.s_scores[i + 1]:.6f}",
                f"{result.k_degrees[i + 1]:.6f}",
            )
        )
    widths = [max(len(r[c]) for r in rows) for c in range(4)]
    for r in rows:
        sys.stdout.write("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() + "\n")


def cmd_ahp(args) -> int:
    matrices = [parse_pairwise_csv(_read_file(p)) for p in args.pairwise]
    merged = matrices[0] if len(matrices) == 1 else aggregate_judgments(matrices)
    weights = derive_weights(merged)
    report = consistency(merged, weights)
    _print_json(
        {
            "weights": [round12(w) for w in weights],
            "consistency": {
                "lambda_max": round12(report.lambda_max),
                "consistency_index": round12(report.consistency_index),
                "random_index": round12(report.random_index),
                "consistency_ratio": round12(report.consistency_ratio),
                "acceptable": report.acceptable,
            },
        }
    )
    if report.consistency_ratio >= CR_ACCEPTANCE_THRESHOLD and not args.allow_inconsistent:
        sys.stderr.write(
            f"InconsistentJudgments: CR = {report.consistency_ratio:.4f} >= "
            f"{CR_ACCEPTANCE_THRESHOLD}; pass --allow-inconsistent to accept\n"
        )
        return EXIT_INCONSISTENT
    return EXIT_OK


def _parse_grid(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"--grid must be comma-separated reals, got {text!r}") from None


def cmd_sweep(args) -> int:
    from .service import sensitivity_to_json_dict

    matrix, weights = _load_matrix(args)
    report = weight_sweep(matrix, weights, _mode_of(args), args.criterion, _parse_grid(args.grid))
    _print_json(sensitivity_to_json_dict(report))
    return EXIT_OK


def cmd_report(args) -> int:
    from .plotting import sensitivity_plot, utility_bar_chart
    from .service import sensitivity_to_json_dict

    matrix, weights = _load_matrix(args)
    mode = _mode_of(args)
    result = evaluate(matrix, weights, mode)

    outdir = Path(args.output_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    path = outdir / "result.json"
    path.write_text(serialize_result_json(result), encoding="utf-8")
    written.append(path)

    path = outdir / "ranking.csv"
    rank_of = {name: i + 1 for i, name in enumerate(result.ranking)}
    lines = ["rank,alternative,S,K"]
    for name in result.ranking:
        i = result.alternatives.index(name)
        lines.append(
            f"{rank_of[name]},{name},{result.s_scores[i + 1]:.12g},{result.k_degrees[i + 1]:.12g}"
        )
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    written.append(path)

    path = outdir / "utility.png"
    utility_bar_chart(result, str(path))
    written.append(path)

    names = args.criterion or [c.name for c in matrix.criteria]
    if matrix.n_criteria < 2:
        names = []  # a lone criterion's weight is pinned at 1; nothing to sweep
    grid = [round(0.05 * i, 2) for i in range(1, 20)]
    for name in names:
        sweep = weight_sweep(matrix, weights, mode, name, grid)
        slug = "".join(ch if ch.isalnum() else "_" for ch in name)
        path = outdir / f"sensitivity_{slug}.csv"
        header = "weight," + ",".join(sweep.alternatives)
        rows = [header]
        for gi, g in enumerate(sweep.grid):
            rows.append(
                f"{g:.12g}," + ",".join(f"{traj[gi]:.12g}" for traj in sweep.k_trajectories)
            )
        path.write_text("\n".join(rows) + "\n", encoding="utf-8")
        written.append(path)
        path = outdir / f"sensitivity_{slug}.png"
        sensitivity_plot(sweep, str(path))
        written.append(path)
        path = outdir / f"sensitivity_{slug}.json"
        path.write_text(
            json.dumps(sensitivity_to_json_dict(sweep), indent=2, ensure_ascii=False) + "\n",
            encoding="utf-8",
        )
        written.append(path)

    for p in written:
        sys.stdout.write(f"wrote {p}\n")
    return EXIT_OK


def cmd_serve(args) -> int:
    from .service import serve

    serve(port=args.port, bind=args.bind, cors_origin=args.cors)
    return EXIT_OK


def build_parser(default_mode: str) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arasrank",
        description="Rank alternatives with additive ratio assessment and pairwise-comparison weighting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mode(p):
        p.add_argument(
            "--mode",
            choices=[m.value for m in PipelineMode],
            default=default_mode,
            help=f"optimal-row rule (default: {default_mode}; env {MODE_ENV_VAR} overrides)",
        )

    p = sub.add_parser("rank", help="rank a decision-matrix CSV")
    p.add_argument("--input", required=True, help="decision matrix CSV")
    p.add_argument("--weights", help="weights file (JSON array or CSV line)")
    add_mode(p)
    p.add_argument("--output", help="write ResultJson here instead of stdout")
    p.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON")
    p.set_defaults(run=cmd_rank)

    p = sub.add_parser("ahp", help="derive weights from pairwise judgments")
    p.add_argument(
        "--pairwise", required=True, action="append",
        help="pairwise comparison CSV (repeat for several experts)",
    )
    p.add_argument(
        "--allow-inconsistent", action="store_true",
        help="exit 0 even when CR >= 0.10",
    )
    p.set_defaults(run=cmd_ahp)

    p = sub.add_parser("sweep", help="sweep one criterion's weight over a grid")
    p.add_argument("--input", required=True)
    p.add_argument("--weights")
    p.add_argument("--criterion", required=True)
    p.add_argument("--grid", required=True, help="comma-separated weights in (0,1)")
    add_mode(p)
    p.set_defaults(run=cmd_sweep)

    p = sub.add_parser("report", help="write result JSON, CSVs and figures to a directory")
    p.add_argument("--input", required=True)
    p.add_argument("--weights")
    p.add_argument("--output-dir", required=True)
    p.add_argument(
        "--criterion", action="append",
        help="criterion to sweep (repeatable; default: all)",
    )
    add_mode(p)
    p.set_defaults(run=cmd_report)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--bind", default="127.0.0.1")
    p.add_argument("--cors", help="allow this origin (off by default)")
    p.set_defaults(run=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        parser = build_parser(_default_mode())
        args = parser.parse_args(argv)
        return args.run(args)
    except McdaError as exc:
        sys.stderr.write(f"{exc.code}: {exc}\n")
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
