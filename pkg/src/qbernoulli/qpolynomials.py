"""Bernoulli-type q-polynomials in one and two variables.

All polynomial constructions read their numbers from a :class:`QFamilies`
instance.  The module-level helpers use a shared default instance backed by
the recurrence tables; the verification suite builds private instances when
it injects faults, so perturbed tables never leak into the default caches.
"""

from __future__ import annotations

import threading
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Dict, Mapping, Optional, Tuple

from .qcombinatorics import improved_weight, minus_one_pochhammer, oplus_expand, q_binomial, q_int
from .qfield import RationalFunction
from .qnumbers import (
    POLY_FAMILIES,
    NumberFamily,
    NumberTable,
    classical_numbers,
    numbers_recurrence,
    numbers_via_series,
)
from .qpoly import QPoly, X, Y
from .qseries import DividedPowerSeries, ExpKind, ser_exp

__all__ = [
    "Construction",
    "QFamilies",
    "DEFAULT_FAMILIES",
    "oplus_poly",
    "ominus_poly",
    "family_poly_univariate",
    "family_poly_bivariate",
    "monomial_expansion",
    "q_derivative",
    "poly_scale_x",
    "poly_eval",
    "poly_limit_q1",
    "classical_poly",
]


class Construction(str, Enum):
    Q_ADDITION = "qAdditionForm"
    UNIVARIATE_PLUS_Y = "univariatePlusY"
    SERIES = "series"


def oplus_poly(n: int) -> QPoly:
    """(x (+)_q y)^n as a bivariate polynomial."""
    e = oplus_expand(n)
    return QPoly({(k, n - k): e[k] for k in range(n + 1)})


def ominus_poly(n: int) -> QPoly:
    terms = {}
    for k, c in enumerate(oplus_expand(n).coeffs):
        terms[(k, n - k)] = c if (n - k) % 2 == 0 else -c
    return QPoly(terms)


def _check_family(family) -> NumberFamily:
    family = NumberFamily.parse(family)
    if family not in POLY_FAMILIES:
        raise ValueError(f"no polynomial family for {family.value}")
    return family


class QFamilies:
    """Number tables plus memoised polynomials built from them.

    ``overrides`` replaces the leading entries of a family's table (used for
    fault injection); entries past an override fall back to the recurrence.
    """

    def __init__(self, overrides: Optional[Mapping[NumberFamily, NumberTable]] = None):
        self.overrides = {NumberFamily.parse(k): v for k, v in (overrides or {}).items()}
        self._cache: Dict[tuple, QPoly] = {}
        self._lock = threading.RLock()

    def with_fault(self, family, index: int, delta=1) -> "QFamilies":
        family = NumberFamily.parse(family)
        size = max(index, 24)
        base = self.table(family, size)
        return QFamilies({**self.overrides, family: base.perturbed(index, delta)})

    def table(self, family, max_n: int, source: str = "recurrence") -> NumberTable:
        """Table 0..max_n from the recurrence or the generating series, overrides applied."""
        family = NumberFamily.parse(family)
        if family is NumberFamily.TANGENT or source == "series":
            base = numbers_via_series(family, max(max_n, 1) if family is NumberFamily.TANGENT else max_n)
            base = NumberTable(family, max_n, base.values[: max_n + 1], base.provenance)
        elif source == "recurrence":
            base = numbers_recurrence(family, max_n)
        else:
            raise ValueError(f"unknown table source {source!r}")
        over = self.overrides.get(family)
        if over is None:
            return base
        vals = list(base.values)
        for i, v in enumerate(over.values[: max_n + 1]):
            vals[i] = v
        return NumberTable(family, max_n, tuple(vals), over.provenance)

    def number(self, family, k: int) -> RationalFunction:
        family = NumberFamily.parse(family)
        over = self.overrides.get(family)
        if over is not None and k < len(over.values):
            return over.values[k]
        return numbers_recurrence(family, k).values[k]

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()

    def _memo(self, key, build):
        with self._lock:
            hit = self._cache.get(key)
        if hit is not None:
            return hit
        val = build()
        with self._lock:
            self._cache[key] = val
        return val

    # polynomials -----------------------------------------------------------

    def univariate(self, family, n: int) -> QPoly:
        """sum_k [n k]_q (-1;q)_{n-k}/2^{n-k} b_k x^{n-k}."""
        family = _check_family(family)
        if n < 0:
            raise ValueError("n must be >= 0")

        def build():
            terms = {}
            for k in range(n + 1):
                c = q_binomial(n, k) * improved_weight(n - k) * self.number(family, k)
                if c:
                    terms[(n - k, 0)] = c
            return QPoly(terms)

        return self._memo(("uni", family, n), build)

    def bivariate(self, family, n: int, construction=Construction.Q_ADDITION) -> QPoly:
        family = _check_family(family)
        construction = Construction(construction)
        if n < 0:
            raise ValueError("n must be >= 0")

        def build():
            if construction is Construction.Q_ADDITION:
                acc = QPoly()
                for k in range(n + 1):
                    b = self.number(family, k)
                    if b:
                        acc = acc + oplus_poly(n - k) * (q_binomial(n, k) * b)
                return acc
            if construction is Construction.UNIVARIATE_PLUS_Y:
                acc = QPoly()
                for k in range(n + 1):
                    w = q_binomial(n, k) * improved_weight(n - k)
                    acc = acc + self.univariate(family, k) * QPoly.monomial(0, n - k, w)
                return acc
            return self._bivariate_series(family, n)

        return self._memo(("bi", family, n, construction), build)

    def _bivariate_series(self, family: NumberFamily, n: int) -> QPoly:
        # kernel(t) * E(tx) * E(ty) with polynomial coefficients
        kernel = DividedPowerSeries([QPoly.constant(self.number(family, k)) for k in range(n + 1)])
        e = ser_exp(ExpKind.IMPROVED, n)
        ex = DividedPowerSeries([X**k * c for k, c in enumerate(e.coeffs)])
        ey = DividedPowerSeries([Y**k * c for k, c in enumerate(e.coeffs)])
        return (kernel * ex * ey).coeffs[n]

    def monomial_expansion(self, family, n: int) -> QPoly:
        """Right-hand side of the inversion formula; equals x^n."""
        family = _check_family(family)
        if n < 0:
            raise ValueError("n must be >= 0")
        P = lambda k: self.univariate(family, k)  # noqa: E731
        poch = minus_one_pochhammer(n)
        if family is NumberFamily.BERNOULLI:
            s = QPoly()
            for k in range(n + 1):
                s = s + P(k) * (q_binomial(n + 1, k) * improved_weight(n + 1 - k))
            return s * (RationalFunction.constant(2**n) / (poch * q_int(n + 1)))
        if family is NumberFamily.EULER:
            s = P(n)
            for k in range(n + 1):
                s = s + P(k) * (q_binomial(n, k) * improved_weight(n - k))
            return s * (RationalFunction.constant(Fraction(2**n, 2)) / poch)
        s = P(n + 1)
        for k in range(n + 2):
            s = s + P(k) * (q_binomial(n + 1, k) * improved_weight(n + 1 - k))
        return s * (RationalFunction.constant(Fraction(2**n, 2)) / (poch * q_int(n + 1)))


DEFAULT_FAMILIES = QFamilies()


def family_poly_univariate(family, n: int) -> QPoly:
    return DEFAULT_FAMILIES.univariate(family, n)


def family_poly_bivariate(family, n: int, construction=Construction.Q_ADDITION) -> QPoly:
    return DEFAULT_FAMILIES.bivariate(family, n, construction)


def monomial_expansion(family, n: int) -> QPoly:
    return DEFAULT_FAMILIES.monomial_expansion(family, n)


def q_derivative(p: QPoly, var: str = "x") -> QPoly:
    return p.q_derivative(var)


def poly_scale_x(p: QPoly, lam, mu=1) -> QPoly:
    return p.scale(lam, mu)


def poly_eval(p: QPoly, x0, y0=0) -> RationalFunction:
    return p.eval(x0, y0)


def poly_limit_q1(p: QPoly) -> Dict[Tuple[int, int], Fraction]:
    return p.limit_q1()


def classical_poly(family, n: int, bivariate: bool = False) -> Dict[Tuple[int, int], Fraction]:
    """Classical B_n(x), E_n(x), G_n(x), or B_n(x+y) etc. when ``bivariate``."""
    family = _check_family(family)
    nums = classical_numbers(family, n)
    out: Dict[Tuple[int, int], Fraction] = {}
    for k in range(n + 1):
        c = comb(n, k) * nums[k]
        if not c:
            continue
        m = n - k
        if bivariate:
            for i in range(m + 1):
                key = (i, m - i)
                out[key] = out.get(key, Fraction(0)) + c * comb(m, i)
        else:
            out[(m, 0)] = out.get((m, 0), Fraction(0)) + c
    return {key: v for key, v in out.items() if v}
