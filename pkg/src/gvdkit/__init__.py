"""Decide geometric vertex decomposability of polynomial ideals over the rationals."""

from .gvd import (
    CyI,
    GVDConfig,
    NyI,
    OneStepResult,
    Strategy,
    find_lex_compatibly_gvd_orders,
    find_one_step_gvd,
    is_gvd,
    is_lex_compatibly_gvd,
    is_weakly_gvd,
    one_step_gvd,
)
from .ideals import Ideal
from .outcome import CheckOutcome, TraceStep, Verdict
from .poly import MonomialOrder, Polynomial, Ring

__all__ = [
    "CheckOutcome", "CyI", "GVDConfig", "Ideal", "MonomialOrder", "NyI", "OneStepResult",
    "Polynomial", "Ring", "Strategy", "TraceStep", "Verdict", "find_lex_compatibly_gvd_orders",
    "find_one_step_gvd", "is_gvd", "is_lex_compatibly_gvd", "is_weakly_gvd", "one_step_gvd",
]
