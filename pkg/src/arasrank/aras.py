"""The additive-ratio ranking pipeline.

Stages, in paper-2011 mode: first-pass column shares over the raw rows, an
optimal row pinned at 1.0 for benefit columns and at the normalized column
minimum for cost columns, reciprocals of every cost entry, a second pass of
column shares over all m+1 rows, weighting, row sums S_i and utility degrees
K_i = S_i / S_0. Standard mode draws the optimal row from the raw column
extremes and normalizes once.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegenerateColumn,
    DegenerateOptimal,
    DimensionMismatch,
    NegativeBenefitValue,
    NonPositiveCostValue,
)
from .model import (
    COST_FLOOR,
    DecisionMatrix,
    Direction,
    EvaluationResult,
    OptimalRow,
    PipelineMode,
    WeightVector,
    validate_matrix,
)


class Stage(Enum):
    FIRST_PASS = "first-pass"
    MAXIMIZED = "maximized"
    FINAL_SHARES = "final-shares"
    WEIGHTED = "weighted"


@dataclass(frozen=True)
class NormalizedMatrix:
    """A pipeline-stage grid; row 0 is the optimal row once it exists.

    ``FIRST_PASS`` grids are m x n (the optimal row is injected afterwards);
    every later stage is (m+1) x n.
    """

    rows: tuple[tuple[float, ...], ...]
    stage: Stage

    def __init__(self, rows: Iterable[Iterable[float]], stage: Stage):
        object.__setattr__(
            self, "rows", tuple(tuple(float(v) for v in row) for row in rows)
        )
        object.__setattr__(self, "stage", stage)

    def column(self, j: int) -> tuple[float, ...]:
        return tuple(row[j] for row in self.rows)


@dataclass(frozen=True)
class PipelineTrace:
    """Every intermediate stage of one evaluation, for inspection and tests."""

    mode: PipelineMode
    first_pass: NormalizedMatrix | None
    optimal_row: OptimalRow
    maximized: NormalizedMatrix
    final_shares: NormalizedMatrix
    weighted: NormalizedMatrix
    result: EvaluationResult


def column_shares(values: Sequence[float]) -> list[float]:
    """Each value's share of the column total; shares sum to 1."""
    arr = np.asarray(values, dtype=float)
    if arr.size and float(arr.min()) < 0:
        raise NegativeBenefitValue(f"cannot take shares of negative value {float(arr.min())!r}")
    total = float(arr.sum())
    if total <= 0:
        raise DegenerateColumn(f"column sums to {total!r}; shares are undefined")
    return [float(v) for v in arr / total]


def reciprocals(values: Sequence[float]) -> list[float]:
    """1/x for every value; the first stage of cost-column normalization."""
    out = []
    for v in values:
        if v < COST_FLOOR:
            raise NonPositiveCostValue(f"cannot invert {v!r} (floor {COST_FLOOR})")
        out.append(1.0 / float(v))
    return out


def optimal_row(
    rows: Sequence[Sequence[float]],
    directions: Sequence[Direction],
    mode: PipelineMode,
) -> OptimalRow:
    """The synthetic best row for the given stage of the pipeline.

    Standard mode reads raw values: column max for benefit criteria, column
    min for cost criteria. Paper-2011 mode reads the first-pass normalized
    grid: benefit entries are pinned at 1.0, cost entries take the
    normalized column minimum.
    """
    n = len(directions)
    if any(len(row) != n for row in rows):
        raise DimensionMismatch(f"rows do not all have {n} entries")
    values = []
    for j, d in enumerate(directions):
        col = [row[j] for row in rows]
        if mode is PipelineMode.PAPER_2011 and d is Direction.BENEFIT:
            values.append(1.0)
        elif d is Direction.BENEFIT:
            values.append(max(col))
        else:
            values.append(min(col))
    return OptimalRow(values, provenance=mode)


def apply_weights(shares: NormalizedMatrix, weights: WeightVector) -> NormalizedMatrix:
    """Multiply each final-shares column by its criterion weight."""
    if shares.stage is not Stage.FINAL_SHARES:
        raise ValueError(f"weights apply to final shares, not {shares.stage}")
    n = len(shares.rows[0]) if shares.rows else 0
    if len(weights) != n:
        raise DimensionMismatch(f"{len(weights)} weights for {n} columns")
    w = np.asarray(weights.weights)
    weighted = np.asarray(shares.rows, dtype=float) * w
    return NormalizedMatrix(weighted, Stage.WEIGHTED)


def optimality_scores(weighted: NormalizedMatrix) -> list[float]:
    """Row sums S_i of the weighted grid, optimal row first."""
    if weighted.stage is not Stage.WEIGHTED:
        raise ValueError(f"scores come from the weighted stage, not {weighted.stage}")
    return [float(s) for s in np.asarray(weighted.rows, dtype=float).sum(axis=1)]


def utility_degrees(s_scores: Sequence[float]) -> list[float]:
    """K_i = S_i / S_0. K_0 is exactly 1; scaling every S cancels out."""
    s0 = float(s_scores[0])
    if s0 <= 0:
        raise DegenerateOptimal(f"optimal score S_0 = {s0!r} must be positive")
    return [1.0] + [float(s) / s0 for s in s_scores[1:]]


def rank_alternatives(k_degrees: Sequence[float], names: Sequence[str]) -> tuple[str, ...]:
    """Names sorted by utility degree, best first; ties keep input order."""
    if len(k_degrees) != len(names):
        raise DimensionMismatch(f"{len(k_degrees)} degrees for {len(names)} names")
    order = sorted(range(len(names)), key=lambda i: -k_degrees[i])
    return tuple(names[i] for i in order)


def evaluate_stages(
    matrix: DecisionMatrix,
    weights: WeightVector,
    mode: PipelineMode = PipelineMode.STANDARD_ARAS,
) -> PipelineTrace:
    """Run the full pipeline and keep every intermediate stage."""
    validate_matrix(matrix, weights)
    directions = matrix.directions
    m, n = matrix.n_alternatives, matrix.n_criteria
    cost_cols = [j for j, d in enumerate(directions) if d is Direction.COST]

    first_pass = None
    if mode is PipelineMode.PAPER_2011:
        cols = [column_shares(matrix.column(j)) for j in range(n)]
        first_rows = [[cols[j][i] for j in range(n)] for i in range(m)]
        first_pass = NormalizedMatrix(first_rows, Stage.FIRST_PASS)
        a0 = optimal_row(first_rows, directions, mode)
        grid = [list(a0.values)] + [list(row) for row in first_rows]
    else:
        a0 = optimal_row(matrix.values, directions, mode)
        grid = [list(a0.values)] + [list(row) for row in matrix.values]

    for j in cost_cols:
        flipped = reciprocals([row[j] for row in grid])
        for row, v in zip(grid, flipped):
            row[j] = v
    maximized = NormalizedMatrix(grid, Stage.MAXIMIZED)

    share_cols = [column_shares(maximized.column(j)) for j in range(n)]
    final = NormalizedMatrix(
        [[share_cols[j][i] for j in range(n)] for i in range(m + 1)],
        Stage.FINAL_SHARES,
    )
    weighted = apply_weights(final, weights)
    s = optimality_scores(weighted)
    k = utility_degrees(s)
    ranking = rank_alternatives(k[1:], matrix.alternatives)
    result = EvaluationResult(
        mode=mode,
        alternatives=matrix.alternatives,
        s_scores=tuple(s),
        k_degrees=tuple(k),
        ranking=ranking,
        weighted_matrix=weighted.rows,
    )
    return PipelineTrace(
        mode=mode,
        first_pass=first_pass,
        optimal_row=a0,
        maximized=maximized,
        final_shares=final,
        weighted=weighted,
        result=result,
    )


def evaluate(
    matrix: DecisionMatrix,
    weights: WeightVector,
    mode: PipelineMode = PipelineMode.STANDARD_ARAS,
) -> EvaluationResult:
    """Rank ``matrix`` under ``weights``; see :class:`PipelineMode`."""
    return evaluate_stages(matrix, weights, mode).result
