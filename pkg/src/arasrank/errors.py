"""Error taxonomy shared by every module.

Each error carries a stable ``code`` (its class name) used verbatim in CLI
stderr lines (``code: message``) and HTTP error bodies
(``{"error": code, "message": text}``).
"""

from __future__ import annotations


class McdaError(Exception):
    """Base class for all domain and format errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


# --- decision matrix / weight validation ---------------------------------

class NonFiniteValue(McdaError):
    """A matrix value or weight is NaN or infinite."""


class NonPositiveCostValue(McdaError):
    """A cost-column value is below the reciprocal-safe floor (1e-12)."""


class NegativeBenefitValue(McdaError):
    """A benefit-column value is negative."""


class DegenerateColumn(McdaError):
    """A column's normalization denominator vanishes (sum <= 0)."""


class WeightSumViolation(McdaError):
    """Weights are not all positive or do not sum to 1 within tolerance."""


class DimensionMismatch(McdaError):
    """Two structures that must agree in size do not."""


class InvalidName(McdaError):
    """A criterion or alternative name is empty or duplicated."""


class EmptyInput(McdaError):
    """An operation received an empty collection."""


# --- pairwise comparisons -------------------------------------------------

class NotSquare(McdaError):
    """A pairwise comparison grid is not n x n."""


class ReciprocityViolation(McdaError):
    """a_ji differs from 1/a_ij (or a diagonal entry is not 1)."""


class ScaleViolation(McdaError):
    """A pairwise judgment lies outside [1/9, 9]."""


class NoConvergence(McdaError):
    """Power iteration hit its iteration cap before the tolerance."""


# --- ranking pipeline -----------------------------------------------------

class DegenerateOptimal(McdaError):
    """The optimal row's score S_0 is not positive."""


# --- sensitivity ----------------------------------------------------------

class UnknownCriterion(McdaError):
    """A swept criterion name does not exist in the matrix."""


class GridOutOfRange(McdaError):
    """A sweep grid value or scan resolution lies outside its valid range."""


class AmbiguousTop(McdaError):
    """The baseline top alternative is tied, so no stability interval exists."""


# --- file formats ---------------------------------------------------------

class ParseError(McdaError):
    """Malformed input text; carries 1-based line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f" (line {line})" if column is None else f" (line {line}, column {column})"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class DirectionError(ParseError):
    """A direction token is neither ``max`` nor ``min``."""


class RaggedRow(ParseError):
    """A CSV row has a different number of columns than the header."""
