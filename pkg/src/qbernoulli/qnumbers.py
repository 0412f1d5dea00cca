"""q-Bernoulli, q-Euler, q-Genocchi and q-tangent numbers.

Each family is computed two independent ways: by solving its q-binomial
recurrence level by level, and by expanding its generating series with the
series engine.  ``classical_numbers`` gives the q = 1 values from the
ordinary binomial recurrences, used as an oracle for the limits.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Tuple

from .qcombinatorics import curly_binomial, improved_weight, q_binomial, q_int
from .qfield import ONE, ZERO, RationalFunction
from .qseries import ExpKind, ser_exp

__all__ = [
    "NumberFamily",
    "NumberTable",
    "bernoulli_numbers_recurrence",
    "euler_numbers_recurrence",
    "genocchi_numbers_recurrence",
    "numbers_recurrence",
    "numbers_via_series",
    "recurrence_residuals",
    "tanh_coefficients",
    "tangent_numbers",
    "tangent_from_genocchi",
    "classical_numbers",
]


class NumberFamily(str, Enum):
    BERNOULLI = "bernoulli"
    EULER = "euler"
    GENOCCHI = "genocchi"
    TANGENT = "tangent"

    @classmethod
    def parse(cls, s) -> "NumberFamily":
        return s if isinstance(s, cls) else cls(str(s).lower())


POLY_FAMILIES = (NumberFamily.BERNOULLI, NumberFamily.EULER, NumberFamily.GENOCCHI)


@dataclass(frozen=True)
class NumberTable:
    family: NumberFamily
    max_n: int
    values: Tuple[RationalFunction, ...]
    provenance: str  # "recurrence" or "series"

    def __getitem__(self, n: int) -> RationalFunction:
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def perturbed(self, index: int, delta) -> "NumberTable":
        vals = list(self.values)
        vals[index] = vals[index] + delta
        return NumberTable(self.family, self.max_n, tuple(vals), self.provenance + "+fault")

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "max_n": self.max_n,
            "provenance": self.provenance,
            "values": [{"n": n, "value": v.to_json()} for n, v in enumerate(self.values)],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "NumberTable":
        vals = tuple(RationalFunction.from_json(e["value"]) for e in obj["values"])
        return cls(NumberFamily(obj["family"]), obj["max_n"], vals, obj["provenance"])


# ---------------------------------------------------------------------------
# recurrences

_lock = threading.Lock()
_rec_cache: Dict[NumberFamily, List[RationalFunction]] = {}


def _extend_bernoulli(vals: List[RationalFunction], max_n: int) -> None:
    # Level n of the recurrence: the b_n terms cancel, so it fixes b_{n-1},
    # whose coefficient is [n n-1]_q * (-1;q)_1/2 = [n]_q.
    while len(vals) <= max_n:
        n = len(vals) + 1
        acc = ONE if n == 1 else ZERO
        for k in range(n - 1):
            if vals[k]:
                acc = acc - q_binomial(n, k) * improved_weight(n - k) * vals[k]
        vals.append(acc / q_int(n))


def _extend_euler_like(vals: List[RationalFunction], max_n: int, rhs_index: int) -> None:
    # {m m}_q = 1, so e_m appears with total coefficient 2 at level m
    while len(vals) <= max_n:
        m = len(vals)
        acc = RationalFunction.constant(2) if m == rhs_index else ZERO
        for k in range(m):
            if vals[k]:
                acc = acc - curly_binomial(m, k) * vals[k]
        vals.append(acc * Fraction(1, 2))


def numbers_recurrence(family, max_n: int) -> NumberTable:
    family = NumberFamily.parse(family)
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    if family is NumberFamily.TANGENT:
        raise ValueError("tangent numbers have no recurrence here; use tangent_numbers")
    with _lock:
        vals = _rec_cache.setdefault(family, [])
        if family is NumberFamily.BERNOULLI:
            _extend_bernoulli(vals, max_n)
        elif family is NumberFamily.EULER:
            _extend_euler_like(vals, max_n, 0)
        else:
            _extend_euler_like(vals, max_n, 1)
        values = tuple(vals[: max_n + 1])
    return NumberTable(family, max_n, values, "recurrence")


def bernoulli_numbers_recurrence(max_n: int) -> NumberTable:
    return numbers_recurrence(NumberFamily.BERNOULLI, max_n)


def euler_numbers_recurrence(max_n: int) -> NumberTable:
    return numbers_recurrence(NumberFamily.EULER, max_n)


def genocchi_numbers_recurrence(max_n: int) -> NumberTable:
    return numbers_recurrence(NumberFamily.GENOCCHI, max_n)


def recurrence_residuals(family, values: Sequence[RationalFunction]) -> List[Tuple[int, RationalFunction]]:
    """(level, LHS - RHS) for every recurrence level the table fully determines.

    Bernoulli levels run 1..N+1 (level N+1 still only involves b_0..b_N),
    Euler and Genocchi levels run 0..N.
    """
    family = NumberFamily.parse(family)
    N = len(values) - 1
    out = []
    if family is NumberFamily.BERNOULLI:
        for n in range(1, N + 2):
            acc = -ONE if n == 1 else ZERO
            for k in range(n):
                acc = acc + q_binomial(n, k) * improved_weight(n - k) * values[k]
            out.append((n, acc))
    elif family in (NumberFamily.EULER, NumberFamily.GENOCCHI):
        target = 0 if family is NumberFamily.EULER else 1
        for m in range(N + 1):
            acc = RationalFunction.constant(-2) if m == target else ZERO
            for k in range(m + 1):
                acc = acc + curly_binomial(m, k) * values[k]
            acc = acc + values[m]
            out.append((m, acc))
    else:
        raise ValueError("no recurrence for tangent numbers")
    return out


def clear_caches() -> None:
    """Drop memoised tables (used for cold-start timings)."""
    with _lock:
        _rec_cache.clear()
    _series_table.cache_clear()
    tanh_coefficients.cache_clear()


# ---------------------------------------------------------------------------
# generating series


def numbers_via_series(family, max_n: int) -> NumberTable:
    family = NumberFamily.parse(family)
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    return _series_table(family, max_n)


@lru_cache(maxsize=None)
def _series_table(family: NumberFamily, max_n: int) -> NumberTable:
    if family is NumberFamily.BERNOULLI:
        # t / (E(t) - 1) = 1 / ((E(t) - 1)/t)
        e = ser_exp(ExpKind.IMPROVED, max_n + 1)
        values = ((e - 1).divide_by_t()).reciprocal().coeffs
    elif family is NumberFamily.EULER:
        values = _euler_kernel(max_n).coeffs
    elif family is NumberFamily.GENOCCHI:
        # 2t/(E+1) = t * (2/(E+1)); multiplying by t shifts g_{n+1} = [n+1]_q e_n
        values = _euler_kernel(max(max_n - 1, 0)).multiply_by_t().coeffs[: max_n + 1]
    else:
        return tangent_numbers(max_n)
    return NumberTable(family, max_n, tuple(values), "series")


def _euler_kernel(order: int):
    e = ser_exp(ExpKind.IMPROVED, order)
    return ((e + 1) * Fraction(1, 2)).reciprocal()


@lru_cache(maxsize=None)
def tanh_coefficients(order: int) -> Tuple[RationalFunction, ...]:
    """Divided-power coefficients c_0..c_order of (E(2t) - 1)/(E(2t) + 1)."""
    e2 = ser_exp(ExpKind.IMPROVED, order).scale_arg(2)
    return ((e2 - 1) * (e2 + 1).reciprocal()).coeffs


def tangent_numbers(max_n: int) -> NumberTable:
    """T_{2k+1} := (-1)^k c_{2k+1}; even slots hold the (vanishing) c_{2k}."""
    if max_n < 1:
        raise ValueError("tangent numbers need max_n >= 1")
    c = tanh_coefficients(max_n)
    values = tuple(v if n % 2 == 0 or (n // 2) % 2 == 0 else -v for n, v in enumerate(c))
    return NumberTable(NumberFamily.TANGENT, max_n, values, "series")


def tangent_from_genocchi(n: int, genocchi: Sequence[RationalFunction] = None) -> RationalFunction:
    """c_{2n+1} = -g_{2n+2} 2^{2n+1} / [2n+2]_q."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if genocchi is None:
        genocchi = numbers_recurrence(NumberFamily.GENOCCHI, 2 * n + 2).values
    return -genocchi[2 * n + 2] * 2 ** (2 * n + 1) / q_int(2 * n + 2)


# ---------------------------------------------------------------------------
# q = 1 oracle


def classical_numbers(family, max_n: int) -> List[Fraction]:
    """Classical B_n, E_n(0)-convention Euler numbers, G_n, or tanh coefficients."""
    family = NumberFamily.parse(family)
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    if family is NumberFamily.BERNOULLI:
        # sum_k C(m,k) B_k - B_m = [m = 1], solved for B_{m-1}
        B: List[Fraction] = []
        for m in range(1, max_n + 2):
            s = Fraction(1 if m == 1 else 0)
            s -= sum(comb(m, k) * B[k] for k in range(m - 1))
            B.append(s / m)
        return B
    if family in (NumberFamily.EULER, NumberFamily.GENOCCHI, NumberFamily.TANGENT):
        target = 1 if family is NumberFamily.GENOCCHI else 0
        vals: List[Fraction] = []
        for m in range(max_n + 1):
            s = Fraction(2 if m == target else 0)
            s -= sum(comb(m, k) * vals[k] for k in range(m))
            vals.append(s / 2)
        if family is NumberFamily.TANGENT:
            # tanh t = 1 - 2/(e^{2t}+1): c_n = -2^n E_n for n >= 1
            t = [Fraction(0)] + [-(2**n) * vals[n] for n in range(1, max_n + 1)]
            return [v if n % 2 == 0 or (n // 2) % 2 == 0 else -v for n, v in enumerate(t)]
        return vals
    raise ValueError(f"unknown family {family}")
