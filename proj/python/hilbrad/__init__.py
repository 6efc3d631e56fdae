"""Exact computations with Borel-fixed monomial ideals and Hilbert scheme incidence graphs."""

from ._core import (
    BudgetExceeded,
    DomainError,
    ParseError,
    centers,
    distance,
    double_saturate,
    enumerate_borel,
    gotzmann,
    hilbert_function,
    hilbert_polynomial,
    in_lex_component,
    is_strongly_stable,
    lex_ideal,
    parse_ideal,
    radius,
    section,
    verify_paper,
)

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "ParseError",
    "centers",
    "distance",
    "double_saturate",
    "enumerate_borel",
    "gotzmann",
    "hilbert_function",
    "hilbert_polynomial",
    "in_lex_component",
    "is_strongly_stable",
    "lex_ideal",
    "parse_ideal",
    "radius",
    "section",
    "verify_paper",
]
