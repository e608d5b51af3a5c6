"""Exact computations in the exceptional Lie superalgebra cvect(0|3)_* inside vect(4|3)."""

from cvect.superpoly import (
    CHART_33,
    CHART_43,
    EVEN,
    ODD,
    Chart,
    ChartMismatchError,
    MixedParityError,
    Monomial,
    SuperPoly,
    Variable,
    combine,
    grading,
    mul,
    partial,
)
from cvect.superfield import GradedComponent, SuperField, commutator, commutator_oracle, div
from cvect.expr import ParseError, format_value, parse_field, parse_poly

__all__ = [
    "CHART_33",
    "CHART_43",
    "EVEN",
    "ODD",
    "Chart",
    "ChartMismatchError",
    "GradedComponent",
    "MixedParityError",
    "Monomial",
    "ParseError",
    "SuperField",
    "SuperPoly",
    "Variable",
    "combine",
    "commutator",
    "commutator_oracle",
    "div",
    "format_value",
    "grading",
    "mul",
    "parse_field",
    "parse_poly",
    "partial",
]
