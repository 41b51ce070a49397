import pytest

from arasrank.aras import (
    NormalizedMatrix,
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
from arasrank.errors import (
    DegenerateColumn,
    DegenerateOptimal,
    DimensionMismatch,
    NonPositiveCostValue,
)
from arasrank.model import Direction, PipelineMode, WeightVector

from conftest import make_matrix
from oracles import (
    CASE_BENEFIT,
    CASE_VALUES,
    CASE_WEIGHTS,
    EXACT_PAPER_K,
    EXACT_PAPER_S,
    EXACT_STANDARD_K,
    PUBLISHED_RANKING,
    STANDARD_RANKING,
    exact_evaluate,
)

B, C = Direction.BENEFIT, Direction.COST


# --- column_shares ----------------------------------------------------------

def test_shares_of_npv_column():
    shares = column_shares([10, 13, 9, 11, 12])
    assert shares == pytest.approx([10 / 55, 13 / 55, 9 / 55, 11 / 55, 12 / 55], abs=1e-15)
    assert shares == pytest.approx([0.1818, 0.2364, 0.1636, 0.2000, 0.2182], abs=5e-5)
    assert sum(shares) == pytest.approx(1.0, abs=1e-12)


def test_shares_uniform():
    assert column_shares([1, 1, 1, 1]) == pytest.approx([0.25] * 4, abs=1e-15)


def test_shares_single_element():
    assert column_shares([7]) == [1.0]


def test_shares_degenerate_column():
    with pytest.raises(DegenerateColumn):
        column_shares([0.0, 0.0])


# --- reciprocals ------------------------------------------------------------

def test_reciprocals_of_pb_shares():
    out = reciprocals([0.15, 0.18, 0.20, 0.20, 0.26])
    assert [round(v, 2) for v in out] == [6.67, 5.56, 5.0, 5.0, 3.85]


def test_reciprocals_fixed_point():
    assert reciprocals([1.0]) == [1.0]


def test_reciprocals_exact():
    assert reciprocals([4, 0.5]) == [0.25, 2.0]


def test_reciprocals_reject_below_floor():
    with pytest.raises(NonPositiveCostValue):
        reciprocals([1e-13])


# --- optimal row ------------------------------------------------------------

def test_optimal_row_paper_mode_from_first_pass():
    first_pass = [
        [10 / 55, 3 / 17, 6 / 39, 7 / 29],
        [13 / 55, 5 / 17, 7 / 39, 9 / 29],
        [9 / 55, 1 / 17, 8 / 39, 1 / 29],
        [11 / 55, 3 / 17, 8 / 39, 7 / 29],
        [12 / 55, 5 / 17, 10 / 39, 5 / 29],
    ]
    row = optimal_row(first_pass, [B, B, C, C], PipelineMode.PAPER_2011)
    assert row.values == pytest.approx((1.0, 1.0, 6 / 39, 1 / 29), abs=1e-15)
    assert row.values == pytest.approx((1.00, 1.00, 0.15, 0.03), abs=5e-3)
    assert row.provenance is PipelineMode.PAPER_2011


def test_optimal_row_standard_mode_from_raw():
    row = optimal_row(CASE_VALUES, [B, B, C, C], PipelineMode.STANDARD_ARAS)
    assert row.values == (13.0, 5.0, 6.0, 1.0)


def test_optimal_row_all_benefit_paper_mode():
    row = optimal_row([[0.3, 0.6], [0.7, 0.4]], [B, B], PipelineMode.PAPER_2011)
    assert row.values == (1.0, 1.0)


# --- apply_weights ----------------------------------------------------------

def test_apply_weights_published_row():
    shares = NormalizedMatrix([[0.12, 0.15, 0.17, 0.04]], Stage.FINAL_SHARES)
    weighted = apply_weights(shares, WeightVector(CASE_WEIGHTS))
    assert weighted.stage is Stage.WEIGHTED
    assert weighted.rows[0] == pytest.approx((0.034, 0.051, 0.037, 0.006), abs=5e-3)


def test_apply_weights_identity():
    shares = NormalizedMatrix([[0.4], [0.6]], Stage.FINAL_SHARES)
    weighted = apply_weights(shares, WeightVector([1.0]))
    assert weighted.rows == ((0.4,), (0.6,))


def test_apply_weights_annihilates_zero_share():
    shares = NormalizedMatrix([[0.0, 1.0]], Stage.FINAL_SHARES)
    weighted = apply_weights(shares, WeightVector([0.5, 0.5]))
    assert weighted.rows[0][0] == 0.0


def test_apply_weights_dimension_mismatch():
    shares = NormalizedMatrix([[0.5, 0.5]], Stage.FINAL_SHARES)
    with pytest.raises(DimensionMismatch):
        apply_weights(shares, WeightVector([1.0]))


def test_apply_weights_requires_final_shares():
    grid = NormalizedMatrix([[0.5, 0.5]], Stage.MAXIMIZED)
    with pytest.raises(ValueError):
        apply_weights(grid, WeightVector([0.5, 0.5]))


# --- scores, degrees, ranking ------------------------------------------------

def test_optimality_scores_row_sum():
    weighted = NormalizedMatrix([[0.026, 0.031, 0.044, 0.008]], Stage.WEIGHTED)
    assert optimality_scores(weighted) == pytest.approx([0.109], abs=1e-12)


def test_optimality_scores_zero_row():
    weighted = NormalizedMatrix([[0.0, 0.0]], Stage.WEIGHTED)
    assert optimality_scores(weighted) == [0.0]


def test_optimality_scores_single_column():
    weighted = NormalizedMatrix([[0.3], [0.2]], Stage.WEIGHTED)
    assert optimality_scores(weighted) == pytest.approx([0.3, 0.2])


def test_utility_degrees_published_column():
    k = utility_degrees([0.105, 0.027, 0.032, 0.031, 0.025, 0.029])
    assert k[0] == 1.0
    assert k == pytest.approx([1, 0.257, 0.305, 0.295, 0.238, 0.276], abs=5e-3)


def test_utility_degree_of_equal_score_is_one():
    assert utility_degrees([0.4, 0.4])[1] == pytest.approx(1.0, abs=1e-15)


def test_utility_degrees_scale_invariant():
    s = [0.105, 0.027, 0.032]
    scaled = [4.0 * v for v in s]
    assert utility_degrees(scaled) == pytest.approx(utility_degrees(s), abs=1e-15)


def test_utility_degrees_degenerate_optimal():
    with pytest.raises(DegenerateOptimal):
        utility_degrees([0.0, 0.1])


def test_rank_alternatives_published_order():
    ranking = rank_alternatives(
        [0.257, 0.304, 0.295, 0.238, 0.276],
        ["Project 1", "Project 2", "Project 3", "Project 4", "Project 5"],
    )
    assert ranking == PUBLISHED_RANKING


def test_rank_ties_keep_input_order():
    assert rank_alternatives([0.5, 0.5, 0.5], ["x", "y", "z"]) == ("x", "y", "z")
    assert rank_alternatives([0.4, 0.5, 0.5], ["x", "y", "z"]) == ("y", "z", "x")


def test_rank_single():
    assert rank_alternatives([0.7], ["only"]) == ("only",)


def test_rank_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        rank_alternatives([0.5], ["a", "b"])


# --- evaluate: golden case study ---------------------------------------------

def test_evaluate_paper_mode_reproduces_case_study(case):
    matrix, weights = case
    result = evaluate(matrix, weights, PipelineMode.PAPER_2011)
    assert result.ranking == PUBLISHED_RANKING
    assert result.k_degrees == pytest.approx(EXACT_PAPER_K, abs=1e-12)
    assert result.s_scores == pytest.approx(EXACT_PAPER_S, abs=1e-12)
    assert result.k_degrees[0] == 1.0


def test_evaluate_against_live_fraction_oracle(case):
    matrix, weights = case
    for mode in PipelineMode:
        _, k = exact_evaluate(CASE_VALUES, CASE_BENEFIT, CASE_WEIGHTS, mode.value)
        result = evaluate(matrix, weights, mode)
        assert result.k_degrees == pytest.approx([float(x) for x in k], abs=1e-12)


def test_evaluate_standard_mode(case):
    matrix, weights = case
    result = evaluate(matrix, weights, PipelineMode.STANDARD_ARAS)
    assert result.ranking == STANDARD_RANKING
    assert result.k_degrees == pytest.approx(EXACT_STANDARD_K, abs=1e-12)
    assert all(k <= 1.0 + 1e-12 for k in result.k_degrees)


def test_evaluate_default_mode_is_standard(case):
    matrix, weights = case
    assert evaluate(matrix, weights).mode is PipelineMode.STANDARD_ARAS


def test_evaluate_single_alternative(tiny_matrix):
    result = evaluate(tiny_matrix, WeightVector([1.0]), PipelineMode.PAPER_2011)
    assert result.ranking == ("A",)
    assert result.k_degrees[0] == 1.0
    assert 0 < result.k_degrees[1] <= 1.0


# --- stage spot checks --------------------------------------------------------

def test_stage_first_pass_matches_normalized_table(case):
    matrix, weights = case
    trace = evaluate_stages(matrix, weights, PipelineMode.PAPER_2011)
    npv = [row[0] for row in trace.first_pass.rows]
    assert npv == pytest.approx([0.18, 0.24, 0.16, 0.20, 0.22], abs=5e-3)


def test_stage_optimal_row_values(case):
    matrix, weights = case
    trace = evaluate_stages(matrix, weights, PipelineMode.PAPER_2011)
    assert trace.optimal_row.values == pytest.approx((1.00, 1.00, 0.15, 0.03), abs=5e-3)


def test_stage_maximized_cost_columns(case):
    matrix, weights = case
    trace = evaluate_stages(matrix, weights, PipelineMode.PAPER_2011)
    pb = [row[2] for row in trace.maximized.rows]
    assert pb == pytest.approx([6.5, 6.5, 39 / 7, 4.875, 4.875, 3.9], abs=1e-12)


def test_stage_final_share_known_typo_cell(case):
    # the published table prints the optimal row's PB share as 0.02; the
    # weighted row beneath it (0.044 = 0.22 * 0.20) shows it must be ~0.20
    matrix, weights = case
    trace = evaluate_stages(matrix, weights, PipelineMode.PAPER_2011)
    assert trace.final_shares.rows[0][2] == pytest.approx(0.20, abs=5e-3)


def test_stage_weighted_second_row(case):
    matrix, weights = case
    trace = evaluate_stages(matrix, weights, PipelineMode.PAPER_2011)
    assert trace.weighted.rows[2] == pytest.approx((0.034, 0.051, 0.037, 0.006), abs=5e-3)


def test_stage_column_sums_are_one(case):
    matrix, weights = case
    for mode in PipelineMode:
        trace = evaluate_stages(matrix, weights, mode)
        for j in range(matrix.n_criteria):
            assert sum(trace.final_shares.column(j)) == pytest.approx(1.0, abs=1e-9)


def test_standard_mode_has_no_first_pass(case):
    matrix, weights = case
    trace = evaluate_stages(matrix, weights, PipelineMode.STANDARD_ARAS)
    assert trace.first_pass is None
    assert trace.optimal_row.values == (13.0, 5.0, 6.0, 1.0)


# --- mode-specific structure ---------------------------------------------------

def test_modes_agree_on_best_alternative(case):
    matrix, weights = case
    paper = evaluate(matrix, weights, PipelineMode.PAPER_2011)
    standard = evaluate(matrix, weights, PipelineMode.STANDARD_ARAS)
    assert paper.ranking[0] == standard.ranking[0] == "Project 2"


def test_all_benefit_matrix_paper_optimal_is_one():
    matrix = make_matrix([[3.0, 1.0], [1.0, 3.0]], [True, True])
    trace = evaluate_stages(matrix, WeightVector([0.5, 0.5]), PipelineMode.PAPER_2011)
    assert trace.optimal_row.values == (1.0, 1.0)
