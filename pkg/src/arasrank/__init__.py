"""Additive-ratio decision analysis with pairwise-comparison weighting.

Rank alternatives scored on benefit and cost criteria, derive criterion
weights from expert judgment matrices with a consistency check, and probe
how stable the ranking is under weight changes.
"""

__version__ = "0.1.0"

from .ahp import (
    ConsistencyReport,
    PairwiseComparisonMatrix,
    RANDOM_INDEX,
    aggregate_judgments,
    consistency,
    derive_weights,
)
from .aras import (
    NormalizedMatrix,
    PipelineTrace,
    Stage,
    apply_weights,
    column_shares,
    evaluate,
    evaluate_stages,
    optimal_row,
    optimality_scores,
    rank_alternatives,
    reciprocals,
    utility_degrees,
)
from .datasets import case_study
from .errors import McdaError
from .io_formats import (
    parse_decision_csv,
    parse_pairwise_csv,
    parse_result_json,
    serialize_decision_csv,
    serialize_result_json,
)
from .model import (
    Criterion,
    DecisionMatrix,
    Direction,
    EvaluationResult,
    OptimalRow,
    PipelineMode,
    WeightVector,
    validate_matrix,
)
from .sensitivity import SensitivityReport, stability_interval, weight_sweep

__all__ = [
    "__version__",
    "ConsistencyReport",
    "PairwiseComparisonMatrix",
    "RANDOM_INDEX",
    "aggregate_judgments",
    "consistency",
    "derive_weights",
    "NormalizedMatrix",
    "PipelineTrace",
    "Stage",
    "apply_weights",
    "column_shares",
    "evaluate",
    "evaluate_stages",
    "optimal_row",
    "optimality_scores",
    "rank_alternatives",
    "reciprocals",
    "utility_degrees",
    "case_study",
    "McdaError",
    "parse_decision_csv",
    "parse_pairwise_csv",
    "parse_result_json",
    "serialize_decision_csv",
    "serialize_result_json",
    "Criterion",
    "DecisionMatrix",
    "Direction",
    "EvaluationResult",
    "OptimalRow",
    "PipelineMode",
    "WeightVector",
    "validate_matrix",
    "SensitivityReport",
    "stability_interval",
    "weight_sweep",
]
