import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from arasrank.datasets import case_study
from arasrank.model import Criterion, DecisionMatrix, Direction, WeightVector


@pytest.fixture(scope="session")
def case():
    """(matrix, weights) of the bundled project-selection dataset."""
    return case_study()


@pytest.fixture
def tiny_matrix():
    """1x1 benefit matrix, the minimal valid instance."""
    return DecisionMatrix([Criterion("C1", Direction.BENEFIT)], ["A"], [[5.0]])


def make_matrix(values, benefit, names=None, criteria=None):
    m, n = len(values), len(values[0])
    names = names or [f"A{i + 1}" for i in range(m)]
    criteria = criteria or [f"C{j + 1}" for j in range(n)]
    crits = [
        Criterion(criteria[j], Direction.BENEFIT if benefit[j] else Direction.COST)
        for j in range(n)
    ]
    return DecisionMatrix(crits, names, values)


@pytest.fixture
def dominant_matrix():
    """Alternative A beats B on every criterion, in both directions."""
    return make_matrix([[10.0, 1.0], [5.0, 2.0]], [True, False], names=["A", "B"])
