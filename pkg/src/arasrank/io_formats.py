"""File formats: decision-matrix CSV, pairwise-judgment CSV, result JSON.

Everything here is deterministic: fixed key order, LF line endings, numbers
at up to 12 significant digits that survive a parse/serialize round trip
byte-identically.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Any

from .ahp import PairwiseComparisonMatrix
from .errors import DirectionError, DimensionMismatch, McdaError, ParseError, RaggedRow
from .model import (
    Criterion,
    DecisionMatrix,
    Direction,
    EvaluationResult,
    PipelineMode,
    WeightVector,
)


def round12(v: float) -> float:
    """Round to 12 significant digits; idempotent under repr round trips."""
    return float(f"{float(v):.12g}")


def _fmt12(v: float) -> str:
    return f"{float(v):.12g}"


def _as_text(data: str | bytes) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    return data


def _csv_rows(text: str) -> list[list[str]]:
    try:
        return list(csv.reader(io.StringIO(text, newline="")))
    except csv.Error as exc:
        raise ParseError(f"malformed CSV: {exc}") from None


def parse_decision_csv(data: str | bytes) -> tuple[DecisionMatrix, WeightVector | None]:
    """Parse the decision-matrix grammar.

    Row 1: ``alternative,<criterion names...>``; row 2:
    ``direction,<max|min...>`` (case-insensitive); optional row 3:
    ``weight,<reals...>``; remaining rows: alternative name followed by its
    scores. CRLF input is tolerated; the weight row may be absent.
    """
    rows = [r for r in _csv_rows(_as_text(data)) if r and any(c.strip() for c in r)]
    if len(rows) < 3:
        raise ParseError("expected header, direction row, and at least one alternative row")

    header = rows[0]
    if header[0].strip().lower() != "alternative":
        raise ParseError(f"first cell must be 'alternative', got {header[0]!r}", line=1, column=1)
    names = [c.strip() for c in header[1:]]
    n = len(names)
    if n == 0:
        raise ParseError("no criterion columns", line=1)

    direction_row = rows[1]
    if direction_row[0].strip().lower() != "direction":
        raise ParseError(
            f"second row must start with 'direction', got {direction_row[0]!r}", line=2, column=1
        )
    if len(direction_row) != n + 1:
        raise RaggedRow(f"direction row has {len(direction_row) - 1} entries, expected {n}", line=2)
    directions = []
    for j, token in enumerate(direction_row[1:]):
        try:
            directions.append(Direction.from_token(token))
        except ValueError:
            raise DirectionError(
                f"direction must be 'max' or 'min', got {token.strip()!r}", line=2, column=j + 2
            ) from None

    body = rows[2:]
    weights = None
    if body and body[0][0].strip().lower() == "weight":
        wrow = body[0]
        if len(wrow) != n + 1:
            raise RaggedRow(f"weight row has {len(wrow) - 1} entries, expected {n}", line=3)
        weights = WeightVector(
            _parse_real(tok, line=3, column=j + 2) for j, tok in enumerate(wrow[1:])
        )
        body = body[1:]

    if not body:
        raise ParseError("no alternative rows")
    first_data_line = 3 + (1 if weights is not None else 0)
    alternatives = []
    values = []
    for i, row in enumerate(body):
        line = first_data_line + i
        if len(row) != n + 1:
            raise RaggedRow(f"row has {len(row) - 1} values, expected {n}", line=line)
        alternatives.append(row[0].strip())
        values.append(
            [_parse_real(tok, line=line, column=j + 2) for j, tok in enumerate(row[1:])]
        )

    criteria = [Criterion(name, d) for name, d in zip(names, directions)]
    return DecisionMatrix(criteria, alternatives, values), weights


def _parse_real(token: str, line: int, column: int) -> float:
    try:
        v = float(token.strip())
    except ValueError:
        raise ParseError(f"not a number: {token.strip()!r}", line=line, column=column) from None
    if math.isnan(v):
        raise ParseError(f"not a number: {token.strip()!r}", line=line, column=column)
    return v


def serialize_decision_csv(matrix: DecisionMatrix, weights: WeightVector | None = None) -> str:
    """Inverse of :func:`parse_decision_csv`; LF endings, 12-digit numbers."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["alternative", *(c.name for c in matrix.criteria)])
    writer.writerow(["direction", *(c.direction.value for c in matrix.criteria)])
    if weights is not None:
        writer.writerow(["weight", *(_fmt12(w) for w in weights)])
    for name, row in zip(matrix.alternatives, matrix.values):
        writer.writerow([name, *(_fmt12(v) for v in row)])
    return buf.getvalue()


def parse_pairwise_csv(data: str | bytes) -> PairwiseComparisonMatrix:
    """Parse a square judgment grid; ``p/q`` fraction literals are exact."""
    rows = [r for r in _csv_rows(_as_text(data)) if r and any(c.strip() for c in r)]
    if not rows:
        raise ParseError("empty pairwise matrix")
    grid = []
    for i, row in enumerate(rows):
        grid.append([_parse_judgment(tok, line=i + 1, column=j + 1) for j, tok in enumerate(row)])
    n = len(grid)
    if any(len(row) != n for row in grid):
        raise ParseError(f"grid is {n} rows but not {n} columns in every row")
    return PairwiseComparisonMatrix(grid)


def _parse_judgment(token: str, line: int, column: int) -> float:
    tok = token.strip()
    if "/" in tok:
        parts = tok.split("/")
        if len(parts) != 2:
            raise ParseError(f"bad fraction {tok!r}", line=line, column=column)
        try:
            num, den = float(parts[0]), float(parts[1])
        except ValueError:
            raise ParseError(f"bad fraction {tok!r}", line=line, column=column) from None
        if den == 0:
            raise ParseError(f"zero denominator in {tok!r}", line=line, column=column)
        return num / den
    return _parse_real(tok, line=line, column=column)


def matrix_to_json_dict(matrix: DecisionMatrix) -> dict[str, Any]:
    """The wire shape the HTTP service and webui exchange for matrices."""
    return {
        "criteria": [
            {"name": c.name, "direction": c.direction.value}
            | ({"unit": c.unit} if c.unit else {})
            for c in matrix.criteria
        ],
        "alternatives": list(matrix.alternatives),
        "values": [[round12(v) for v in row] for row in matrix.values],
    }


def matrix_from_json_dict(doc: Any) -> DecisionMatrix:
    if not isinstance(doc, dict):
        raise ParseError("matrix must be an object")
    try:
        criteria = [
            Criterion(
                str(c["name"]),
                Direction.from_token(str(c["direction"])),
                c.get("unit"),
            )
            for c in doc["criteria"]
        ]
        alternatives = [str(a) for a in doc["alternatives"]]
        values = [[float(v) for v in row] for row in doc["values"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad matrix object: {exc}") from None
    return DecisionMatrix(criteria, alternatives, values)


def result_to_json_dict(result: EvaluationResult) -> dict[str, Any]:
    rank_of = {name: pos + 1 for pos, name in enumerate(result.ranking)}
    entries = [
        {
            "name": name,
            "S": round12(result.s_scores[i + 1]),
            "K": round12(result.k_degrees[i + 1]),
            "rank": rank_of[name],
            "row": i + 1,
        }
        for i, name in enumerate(result.alternatives)
    ]
    entries.sort(key=lambda e: e["rank"])
    return {
        "mode": result.mode.value,
        "optimal": {"S": round12(result.s_scores[0]), "K": 1},
        "alternatives": entries,
        "weighted_matrix": [[round12(v) for v in row] for row in result.weighted_matrix],
    }


def serialize_result_json(result: EvaluationResult) -> str:
    """Deterministic ResultJson text; serialize(parse(...)) is byte-identical."""
    return json.dumps(result_to_json_dict(result), indent=2, ensure_ascii=False) + "\n"


def parse_result_json(data: str | bytes) -> EvaluationResult:
    try:
        doc = json.loads(_as_text(data))
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None
    try:
        mode = PipelineMode.from_token(doc["mode"])
        entries = sorted(doc["alternatives"], key=lambda e: e["row"])
        names = tuple(str(e["name"]) for e in entries)
        s = (float(doc["optimal"]["S"]), *(float(e["S"]) for e in entries))
        k = (float(doc["optimal"]["K"]), *(float(e["K"]) for e in entries))
        by_rank = sorted(doc["alternatives"], key=lambda e: e["rank"])
        ranking = tuple(str(e["name"]) for e in by_rank)
        weighted = tuple(tuple(float(v) for v in row) for row in doc["weighted_matrix"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad result object: {exc}") from None
    if len(weighted) != len(names) + 1:
        raise DimensionMismatch(
            f"weighted matrix has {len(weighted)} rows for {len(names)} alternatives"
        )
    return EvaluationResult(
        mode=mode,
        alternatives=names,
        s_scores=s,
        k_degrees=k,
        ranking=ranking,
        weighted_matrix=weighted,
    )
