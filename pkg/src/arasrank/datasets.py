"""Bundled datasets."""

from __future__ import annotations

from importlib import resources

from .io_formats import parse_decision_csv
from .model import DecisionMatrix, WeightVector


def case_study_path():
    """Filesystem path of the bundled project-selection dataset."""
    return resources.files("arasrank").joinpath("data/case_study.csv")


def case_study() -> tuple[DecisionMatrix, WeightVector]:
    """Five projects scored on NPV, ROR (benefit) and PB, PR (cost)."""
    matrix, weights = parse_decision_csv(case_study_path().read_text(encoding="utf-8"))
    assert weights is not None
    return matrix, weights
