"""Exact q-Bernoulli, q-Euler, q-Genocchi and q-tangent numbers and polynomials
over Q(q), with a verification suite for their identities."""

from .qfield import Q, IntPoly, RationalFunction, rf_eval, rf_limit_q1, rf_make
from .qcombinatorics import curly_binomial, oplus_expand, ominus_expand, pochhammer, q_binomial, q_factorial, q_int
from .qseries import DividedPowerSeries, ser_exp
from .qnumbers import (
    NumberFamily,
    NumberTable,
    classical_numbers,
    numbers_recurrence,
    numbers_via_series,
    tangent_from_genocchi,
    tangent_numbers,
)
from .qpoly import QPoly, X, Y
from .qpolynomials import QFamilies, family_poly_bivariate, family_poly_univariate, monomial_expansion
from .identities import CheckResult, SuiteConfig, SuiteReport, run_check, run_suite

__version__ = "0.1.0"


def clear_caches() -> None:
    """Reset every memo table so the next computation starts cold."""
    from . import qcombinatorics, qnumbers, qpolynomials

    for name in ("q_int", "q_factorial", "q_binomial", "minus_one_pochhammer", "improved_weight", "curly_binomial", "oplus_expand", "ominus_expand"):
        getattr(qcombinatorics, name).cache_clear()
    qnumbers.clear_caches()
    qpolynomials.DEFAULT_FAMILIES.clear()

__all__ = [
    "Q", "IntPoly", "RationalFunction", "rf_eval", "rf_limit_q1", "rf_make",
    "curly_binomial", "oplus_expand", "ominus_expand", "pochhammer", "q_binomial", "q_factorial", "q_int",
    "DividedPowerSeries", "ser_exp",
    "NumberFamily", "NumberTable", "classical_numbers", "numbers_recurrence", "numbers_via_series",
    "tangent_from_genocchi", "tangent_numbers",
    "QPoly", "X", "Y",
    "QFamilies", "family_poly_bivariate", "family_poly_univariate", "monomial_expansion",
    "CheckResult", "SuiteConfig", "SuiteReport", "run_check", "run_suite",
    "clear_caches",
]
