"""What-if analysis over criterion weights.

Sweeping one criterion's weight rescales the remaining weights
proportionally, so their relative importance is preserved while the vector
keeps summing to 1. Rank boundaries are found by exhaustive scanning, never
bisection: rank changes need not be monotone in the weight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .aras import evaluate
from .errors import AmbiguousTop, GridOutOfRange, UnknownCriterion
from .model import DecisionMatrix, PipelineMode, WeightVector, validate_matrix


@dataclass(frozen=True)
class SensitivityReport:
    """K trajectories and rank behaviour of one swept criterion.

    ``k_trajectories[i]`` follows alternative i (input order) across
    ``grid``. ``rank_change_points`` holds the 0-based grid indices whose
    ranking differs from the previous grid point's. ``stability_interval``
    bounds the weights around the baseline within which the top alternative
    was observed unchanged; an endpoint is the nearest grid point where the
    top changed, or the outermost grid point scanned when it never did.
    """

    criterion: str
    baseline_weight: float
    grid: tuple[float, ...]
    alternatives: tuple[str, ...]
    k_trajectories: tuple[tuple[float, ...], ...]
    rank_change_points: tuple[int, ...]
    stability_interval: tuple[float, float]


def swept_weights(weights: WeightVector, index: int, value: float) -> WeightVector:
    """The baseline vector with one weight moved to ``value``.

    Non-swept weights are scaled by (1 - value) / (1 - baseline) and the
    vector is renormalized by its actual sum. A value bitwise-equal to the
    baseline returns the baseline object itself, so sweeps reproduce the
    baseline evaluation exactly at that point.
    """
    base = weights[index]
    if value == base:
        return weights
    scale = (1.0 - value) / (1.0 - base)
    raw = [value if j == index else w * scale for j, w in enumerate(weights)]
    total = sum(raw)
    return WeightVector(w / total for w in raw)


def _criterion_index(matrix: DecisionMatrix, criterion: str) -> int:
    for j, crit in enumerate(matrix.criteria):
        if crit.name == criterion:
            return j
    raise UnknownCriterion(f"no criterion named {criterion!r}")


def _check_sweepable(matrix: DecisionMatrix, grid: Sequence[float]) -> None:
    if matrix.n_criteria < 2:
        raise GridOutOfRange(
            "cannot sweep the only criterion: no weight in (0,1) keeps the vector normalized"
        )
    if not grid:
        raise GridOutOfRange("sweep grid is empty")
    for g in grid:
        if not (0.0 < g < 1.0) or not math.isfinite(g):
            raise GridOutOfRange(f"grid value {g!r} outside (0, 1)")


def weight_sweep(
    matrix: DecisionMatrix,
    weights: WeightVector,
    mode: PipelineMode,
    criterion: str,
    grid: Sequence[float],
) -> SensitivityReport:
    """Re-rank at every grid value of one criterion's weight."""
    validate_matrix(matrix, weights)
    j = _criterion_index(matrix, criterion)
    _check_sweepable(matrix, grid)

    baseline = evaluate(matrix, weights, mode)
    base_top = baseline.ranking[0]

    grid = tuple(float(g) for g in grid)
    rankings = []
    k_rows = []  # one row per grid point, K per alternative in input order
    for g in grid:
        res = evaluate(matrix, swept_weights(weights, j, g), mode)
        rankings.append(res.ranking)
        k_rows.append(res.k_degrees[1:])
    changes = tuple(
        i for i in range(1, len(grid)) if rankings[i] != rankings[i - 1]
    )
    trajectories = tuple(
        tuple(row[a] for row in k_rows) for a in range(matrix.n_alternatives)
    )
    tops_ok = [r[0] == base_top for r in rankings]
    interval = _interval_from_scan(grid, tops_ok, weights[j])
    return SensitivityReport(
        criterion=criterion,
        baseline_weight=weights[j],
        grid=grid,
        alternatives=matrix.alternatives,
        k_trajectories=trajectories,
        rank_change_points=changes,
        stability_interval=interval,
    )


def _interval_from_scan(
    grid: Sequence[float], tops_ok: Sequence[bool], base: float
) -> tuple[float, float]:
    """Stability bounds around ``base`` from scanned points.

    Walking outward from the baseline, the bound on each side is the first
    point where the top alternative changed; if it never does, the bound is
    the outermost point scanned on that side (or the baseline itself when
    nothing was scanned there).
    """
    order = sorted(range(len(grid)), key=lambda i: grid[i])
    below = [i for i in order if grid[i] <= base]
    above = [i for i in order if grid[i] > base]
    lo = base if not below else grid[below[0]]
    for i in reversed(below):
        if not tops_ok[i]:
            lo = grid[i]
            break
    hi = base if not above else grid[above[-1]]
    for i in above:
        if not tops_ok[i]:
            hi = grid[i]
            break
    return min(lo, base), max(hi, base)


def stability_interval(
    matrix: DecisionMatrix,
    weights: WeightVector,
    mode: PipelineMode,
    criterion: str,
    resolution: float,
) -> tuple[float, float]:
    """Weight band around the baseline keeping the top alternative unchanged.

    Scans every multiple of ``resolution`` in (0, 1); endpoints are therefore
    reported at scan resolution. The baseline top must be unique.
    """
    if not (0.0 < resolution <= 0.1):
        raise GridOutOfRange(f"resolution {resolution!r} outside (0, 0.1]")
    validate_matrix(matrix, weights)
    j = _criterion_index(matrix, criterion)

    baseline = evaluate(matrix, weights, mode)
    k = baseline.k_degrees[1:]
    top_k = max(k)
    if sum(1 for v in k if v == top_k) > 1:
        raise AmbiguousTop(
            f"baseline top alternative is tied at K = {top_k!r}; no unique interval exists"
        )
    base_top = baseline.ranking[0]

    steps = int(math.floor((1.0 - 1e-12) / resolution))
    grid = [i * resolution for i in range(1, steps + 1)]
    _check_sweepable(matrix, grid)
    tops_ok = [
        evaluate(matrix, swept_weights(weights, j, g), mode).ranking[0] == base_top
        for g in grid
    ]
    return _interval_from_scan(grid, tops_ok, weights[j])
