"""Criterion weighting from expert pairwise comparisons.

Weights come from the principal right eigenvector of the judgment matrix,
found by power iteration; judgment coherence is reported as the consistency
ratio CR = CI / RI against the standard random-index constants. Group
judgments aggregate by element-wise geometric mean, the only rule that
preserves reciprocity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyInput,
    NoConvergence,
    NotSquare,
    ReciprocityViolation,
    ScaleViolation,
)
from .model import WeightVector

SCALE_MIN = 1.0 / 9.0
SCALE_MAX = 9.0
RECIPROCITY_RTOL = 1e-9

# Random Index by matrix order; orders beyond the table reuse the last value.
RANDOM_INDEX = {
    1: 0.0, 2: 0.0, 3: 0.58, 4: 0.90, 5: 1.12,
    6: 1.24, 7: 1.32, 8: 1.41, 9: 1.49, 10: 1.49,
}

CR_ACCEPTANCE_THRESHOLD = 0.10

POWER_ITERATION_TOL = 1e-10
POWER_ITERATION_CAP = 10_000


@dataclass(frozen=True)
class PairwiseComparisonMatrix:
    """Reciprocal n x n judgment grid on the 1/9..9 scale."""

    entries: tuple[tuple[float, ...], ...]

    def __init__(self, entries: Iterable[Iterable[float]]):
        grid = tuple(tuple(float(v) for v in row) for row in entries)
        object.__setattr__(self, "entries", grid)
        n = len(grid)
        if n == 0:
            raise EmptyInput("pairwise comparison matrix is empty")
        for row in grid:
            if len(row) != n:
                raise NotSquare(f"{n} rows but a row of length {len(row)}")
        for i in range(n):
            for j in range(n):
                a = grid[i][j]
                if not math.isfinite(a) or not (SCALE_MIN <= a <= SCALE_MAX):
                    raise ScaleViolation(
                        f"entry ({i + 1},{j + 1}) = {a!r} outside [1/9, 9]"
                    )
        for i in range(n):
            if abs(grid[i][i] - 1.0) > RECIPROCITY_RTOL:
                raise ReciprocityViolation(f"diagonal entry ({i + 1},{i + 1}) = {grid[i][i]!r}")
            for j in range(i + 1, n):
                expected = 1.0 / grid[i][j]
                if abs(grid[j][i] - expected) > RECIPROCITY_RTOL * abs(expected):
                    raise ReciprocityViolation(
                        f"entry ({j + 1},{i + 1}) = {grid[j][i]!r} is not 1/a_({i + 1},{j + 1})"
                    )

    @property
    def order(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class ConsistencyReport:
    lambda_max: float
    consistency_index: float
    random_index: float
    consistency_ratio: float
    acceptable: bool


def aggregate_judgments(
    matrices: Sequence[PairwiseComparisonMatrix],
) -> PairwiseComparisonMatrix:
    """Element-wise geometric mean of several experts' judgments.

    The upper triangle is averaged and mirrored, so the result satisfies
    reciprocity exactly rather than merely within floating-point error.
    """
    if not matrices:
        raise EmptyInput("no judgment matrices to aggregate")
    n = matrices[0].order
    for m in matrices[1:]:
        if m.order != n:
            raise DimensionMismatch(f"judgment matrices of order {n} and {m.order}")
    k = len(matrices)
    grid = [[1.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            product = math.prod(m.entries[i][j] for m in matrices)
            gm = product ** (1.0 / k)
            grid[i][j] = gm
            grid[j][i] = 1.0 / gm
    return PairwiseComparisonMatrix(grid)


def derive_weights(
    matrix: PairwiseComparisonMatrix,
    *,
    tol: float = POWER_ITERATION_TOL,
    max_iterations: int = POWER_ITERATION_CAP,
) -> WeightVector:
    """Principal right eigenvector by power iteration, normalized to sum 1.

    Starts uniform and renormalizes each step; stops once the L1 change
    between successive iterates drops to ``tol``. Raises
    :class:`NoConvergence` if the iteration cap is hit first.
    """
    a = np.asarray(matrix.entries, dtype=float)
    n = matrix.order
    w = np.full(n, 1.0 / n)
    for _ in range(max_iterations):
        nxt = a @ w
        nxt /= nxt.sum()
        delta = float(np.abs(nxt - w).sum())
        w = nxt
        if delta <= tol:
            return WeightVector(float(x) for x in w)
    raise NoConvergence(
        f"power iteration did not reach L1 change {tol} in {max_iterations} iterations"
    )


def consistency(matrix: PairwiseComparisonMatrix, weights: WeightVector) -> ConsistencyReport:
    """Consistency report for ``weights`` derived from ``matrix``.

    lambda_max is the mean of (A w)_i / w_i; CI = (lambda_max - n)/(n - 1)
    for n >= 2; CR = CI/RI for n >= 3 and 0 below that (1x1 and 2x2
    reciprocal matrices are always consistent).
    """
    n = matrix.order
    if len(weights) != n:
        raise DimensionMismatch(f"{len(weights)} weights for an order-{n} matrix")
    a = np.asarray(matrix.entries, dtype=float)
    w = np.asarray(weights.weights)
    lambda_max = float(np.mean((a @ w) / w))
    ci = (lambda_max - n) / (n - 1) if n >= 2 else 0.0
    ri = RANDOM_INDEX.get(n, RANDOM_INDEX[max(RANDOM_INDEX)])
    cr = ci / ri if n >= 3 else 0.0
    return ConsistencyReport(
        lambda_max=lambda_max,
        consistency_index=ci,
        random_index=ri,
        consistency_ratio=cr,
        acceptable=cr < CR_ACCEPTANCE_THRESHOLD,
    )
