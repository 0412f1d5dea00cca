"""q-integers, q-factorials, Gaussian binomials, q-shifted factorials and the
q-addition expansion ``(x (+)_q y)^n`` built from the improved q-exponential."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Tuple

from .qfield import ONE, ZERO, RationalFunction, as_rf

__all__ = [
    "q_int",
    "q_factorial",
    "q_binomial",
    "pochhammer",
    "minus_one_pochhammer",
    "curly_binomial",
    "OplusExpansion",
    "oplus_expand",
    "ominus_expand",
]


@lru_cache(maxsize=None)
def q_int(a: int) -> RationalFunction:
    """[a]_q = (1 - q^a)/(1 - q)."""
    if a >= 0:
        return RationalFunction((1,) * a, (1,), _canonical=True)
    # (1 - q^a)/(1 - q) = -(q^-1 + ... + q^a) for a < 0
    return RationalFunction([-1] * (-a), (0,) * (-a) + (1,))


@lru_cache(maxsize=None)
def q_factorial(n: int) -> RationalFunction:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> RationalFunction:
    """Gaussian binomial [n k]_q; zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    k = min(k, n - k)
    # q-Pascal keeps every entry a polynomial; no gcds needed
    a = q_binomial(n - 1, k - 1)._num
    b = q_binomial(n - 1, k)._num
    out = list(a) + [0] * max(0, len(b) + k - len(a))
    for i, v in enumerate(b):
        out[i + k] += v
    return RationalFunction(out, (1,), _canonical=True)


def pochhammer(a, n: int) -> RationalFunction:
    """(a; q)_n = prod_{j<n} (1 - q^j a)."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    a = as_rf(a)
    out = ONE
    for j in range(n):
        out = out * (1 - RationalFunction.monomial(j) * a)
    return out


@lru_cache(maxsize=None)
def minus_one_pochhammer(n: int) -> RationalFunction:
    """(-1; q)_n, the normalisation of the improved exponential."""
    if n == 0:
        return ONE
    return minus_one_pochhammer(n - 1) * (1 + RationalFunction.monomial(n - 1))


@lru_cache(maxsize=None)
def improved_weight(n: int) -> RationalFunction:
    """(-1; q)_n / 2^n."""
    return minus_one_pochhammer(n) * Fraction(1, 2**n)


@lru_cache(maxsize=None)
def curly_binomial(n: int, k: int) -> RationalFunction:
    """{n k}_q = [n k]_q (-1;q)_{n-k} / 2^{n-k}; reduces to C(n, k) at q = 1."""
    if k < 0 or n < 0 or k > n:
        return ZERO
    return q_binomial(n, k) * improved_weight(n - k)


@dataclass(frozen=True)
class OplusExpansion:
    """Coefficients of (x (+)_q y)^n; ``coeffs[k]`` multiplies x^k y^(n-k)."""

    n: int
    coeffs: Tuple[RationalFunction, ...]

    def __getitem__(self, k: int) -> RationalFunction:
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)


@lru_cache(maxsize=None)
def oplus_expand(n: int) -> OplusExpansion:
    if n < 0:
        raise ValueError("oplus_expand needs n >= 0")
    coeffs = tuple(
        q_binomial(n, k) * minus_one_pochhammer(k) * minus_one_pochhammer(n - k) * Fraction(1, 2**n)
        for k in range(n + 1)
    )
    return OplusExpansion(n, coeffs)


@lru_cache(maxsize=None)
def ominus_expand(n: int) -> OplusExpansion:
    plus = oplus_expand(n)
    coeffs = tuple(c if (n - k) % 2 == 0 else -c for k, c in enumerate(plus.coeffs))
    return OplusExpansion(n, coeffs)
