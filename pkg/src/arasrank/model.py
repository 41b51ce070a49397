"""Core domain types: criteria, decision matrices, weights, evaluation results.

All types are immutable after construction and safe to share between
concurrent tasks. Structural checks (shapes, name hygiene) run at
construction; domain checks live in :func:`validate_matrix`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import (
    DegenerateColumn,
    DimensionMismatch,
    EmptyInput,
    InvalidName,
    NegativeBenefitValue,
    NonFiniteValue,
    NonPositiveCostValue,
    WeightSumViolation,
)

# Cost values below this cannot be safely inverted by the two-stage procedure.
COST_FLOOR = 1e-12
# Hand-entered weights carry rounding; this is the accepted drift on their sum.
WEIGHT_SUM_TOL = 1e-6


class Direction(Enum):
    """Whether larger raw values are better (benefit) or worse (cost)."""

    BENEFIT = "max"
    COST = "min"

    @classmethod
    def from_token(cls, token: str) -> "Direction":
        t = token.strip().lower()
        if t == "max":
            return cls.BENEFIT
        if t == "min":
            return cls.COST
        raise ValueError(f"unknown direction token {token!r}")


class PipelineMode(Enum):
    """Which optimal-row rule the ranking pipeline applies.

    ``PAPER_2011`` pins benefit entries of the optimal row at 1.0 on the
    first-pass normalized matrix and takes cost entries from the normalized
    column minima, then normalizes a second time. ``STANDARD_ARAS`` draws the
    optimal row from the raw column extremes and normalizes once.
    """

    PAPER_2011 = "paper-2011"
    STANDARD_ARAS = "standard"

    @classmethod
    def from_token(cls, token: str) -> "PipelineMode":
        for mode in cls:
            if mode.value == token.strip().lower():
                return mode
        raise ValueError(f"unknown mode {token!r} (expected 'paper-2011' or 'standard')")


@dataclass(frozen=True)
class Criterion:
    name: str
    direction: Direction
    unit: str | None = None


@dataclass(frozen=True)
class DecisionMatrix:
    """m alternatives scored against n directed criteria."""

    criteria: tuple[Criterion, ...]
    alternatives: tuple[str, ...]
    values: tuple[tuple[float, ...], ...]

    def __init__(
        self,
        criteria: Iterable[Criterion],
        alternatives: Iterable[str],
        values: Iterable[Iterable[float]],
    ):
        object.__setattr__(self, "criteria", tuple(criteria))
        object.__setattr__(self, "alternatives", tuple(str(a) for a in alternatives))
        object.__setattr__(
            self, "values", tuple(tuple(float(v) for v in row) for row in values)
        )
        if not self.criteria or not self.alternatives:
            raise EmptyInput("a decision matrix needs at least one criterion and one alternative")
        if len(self.values) != len(self.alternatives):
            raise DimensionMismatch(
                f"{len(self.alternatives)} alternatives but {len(self.values)} value rows"
            )
        n = len(self.criteria)
        for i, row in enumerate(self.values):
            if len(row) != n:
                raise DimensionMismatch(f"value row {i + 1} has {len(row)} entries, expected {n}")
        _check_names((c.name for c in self.criteria), "criterion")
        _check_names(self.alternatives, "alternative")

    @property
    def n_alternatives(self) -> int:
        return len(self.alternatives)

    @property
    def n_criteria(self) -> int:
        return len(self.criteria)

    @property
    def directions(self) -> tuple[Direction, ...]:
        return tuple(c.direction for c in self.criteria)

    def column(self, j: int) -> tuple[float, ...]:
        return tuple(row[j] for row in self.values)


@dataclass(frozen=True)
class WeightVector:
    """Criterion importances, positive and summing to 1."""

    weights: tuple[float, ...]

    def __init__(self, weights: Iterable[float]):
        object.__setattr__(self, "weights", tuple(float(w) for w in weights))
        if not self.weights:
            raise EmptyInput("weight vector is empty")

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, j: int) -> float:
        return self.weights[j]


@dataclass(frozen=True)
class OptimalRow:
    """The synthetic best row every alternative is measured against."""

    values: tuple[float, ...]
    provenance: PipelineMode

    def __init__(self, values: Iterable[float], provenance: PipelineMode):
        object.__setattr__(self, "values", tuple(float(v) for v in values))
        object.__setattr__(self, "provenance", provenance)


@dataclass(frozen=True)
class EvaluationResult:
    """Scores, utility degrees and ranking, optimal row first (index 0).

    ``s_scores`` and ``k_degrees`` hold m+1 entries with the optimal row at
    index 0 (K_0 is exactly 1); ``weighted_matrix`` is the (m+1) x n grid in
    the same row order; ``ranking`` lists alternative names best-first with
    ties broken by input order.
    """

    mode: PipelineMode
    alternatives: tuple[str, ...]
    s_scores: tuple[float, ...]
    k_degrees: tuple[float, ...]
    ranking: tuple[str, ...]
    weighted_matrix: tuple[tuple[float, ...], ...]


def _check_names(names: Iterable[str], kind: str) -> None:
    seen: set[str] = set()
    for name in names:
        if not name.strip():
            raise InvalidName(f"{kind} name must be non-empty")
        if name in seen:
            raise InvalidName(f"duplicate {kind} name {name!r}")
        seen.add(name)


def validate_matrix(
    matrix: DecisionMatrix,
    weights: WeightVector,
    *,
    renormalize: bool = False,
) -> tuple[DecisionMatrix, WeightVector]:
    """Check every domain invariant; return the pair unchanged when it holds.

    Benefit values must be >= 0 (a benefit column of all zeros is rejected,
    its normalization denominator vanishes); cost values must be >= 1e-12 so
    the reciprocal stage cannot overflow. Weights must be positive, match the
    criterion count, and sum to 1 within 1e-6 unless ``renormalize`` is set,
    in which case they are rescaled by their actual sum.

    Idempotent: validating a validated pair returns the identical pair.
    """
    for i, row in enumerate(matrix.values):
        for j, v in enumerate(row):
            if not math.isfinite(v):
                raise NonFiniteValue(
                    f"value for {matrix.alternatives[i]!r} / {matrix.criteria[j].name!r} is {v!r}"
                )
    for j, crit in enumerate(matrix.criteria):
        col = matrix.column(j)
        if crit.direction is Direction.COST:
            low = min(col)
            if low < COST_FLOOR:
                raise NonPositiveCostValue(
                    f"cost criterion {crit.name!r} holds {low!r}; "
                    f"values below {COST_FLOOR} have no usable reciprocal"
                )
        else:
            if min(col) < 0:
                raise NegativeBenefitValue(
                    f"benefit criterion {crit.name!r} holds {min(col)!r}"
                )
            if sum(col) <= 0:
                raise DegenerateColumn(
                    f"benefit criterion {crit.name!r} is all zeros; its column share is undefined"
                )

    if len(weights) != matrix.n_criteria:
        raise DimensionMismatch(
            f"{len(weights)} weights for {matrix.n_criteria} criteria"
        )
    for w in weights:
        if not math.isfinite(w):
            raise NonFiniteValue(f"weight {w!r}")
        if w <= 0:
            raise WeightSumViolation(f"weights must be positive, got {w!r}")

    total = sum(weights)
    if renormalize:
        return matrix, WeightVector(w / total for w in weights)
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise WeightSumViolation(f"weights sum to {total!r}, expected 1 within {WEIGHT_SUM_TOL}")
    return matrix, weights
