"""Truncated power series in t written in the divided-power basis t^n/[n]_q!.

A series of order N stores c_0..c_N and denotes sum c_n t^n/[n]_q!.  Products
are Gaussian-binomial convolutions.  Coefficients may live in any commutative
ring that accepts ints and RationalFunctions in ``+`` and ``*`` and offers
``inverse()`` on units (RationalFunction and QPoly both qualify).
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Generic, Sequence, Tuple, TypeVar

from .qcombinatorics import improved_weight, q_binomial, q_int
from .qfield import ONE, RationalFunction

__all__ = [
    "ExpKind",
    "DividedPowerSeries",
    "ser_exp",
    "OrderMismatch",
    "NonInvertibleConstantTerm",
    "NonzeroConstantTerm",
    "IndexBeyondOrder",
]

R = TypeVar("R")


class OrderMismatch(ValueError):
    pass


class NonInvertibleConstantTerm(ZeroDivisionError):
    pass


class NonzeroConstantTerm(ValueError):
    pass


class IndexBeyondOrder(IndexError):
    pass


class ExpKind(str, Enum):
    SMALL_E = "small-e"
    BIG_E = "big-E"
    IMPROVED = "improved"


class DividedPowerSeries(Generic[R]):
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[R]):
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs: Tuple[R, ...] = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> R:
        if not 0 <= n <= self.order:
            raise IndexBeyondOrder(f"index {n} outside 0..{self.order}")
        return self.coeffs[n]

    def __getitem__(self, n: int) -> R:
        return self.coeff(n)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, DividedPowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"DividedPowerSeries(order={self.order}, coeffs={list(map(str, self.coeffs))})"

    def _zero(self) -> R:
        return self.coeffs[0] * 0

    def _check(self, other: "DividedPowerSeries") -> None:
        if self.order != other.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    @classmethod
    def constant(cls, c, order: int) -> "DividedPowerSeries":
        zero = c * 0
        return cls((c,) + (zero,) * order)

    def one(self) -> "DividedPowerSeries":
        return DividedPowerSeries.constant(self._zero() + 1, self.order)

    # ring structure --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, DividedPowerSeries):
            self._check(other)
            return DividedPowerSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])
        # scalar added to the constant term
        return DividedPowerSeries((self.coeffs[0] + other,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return DividedPowerSeries([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scalar_mul(self, s) -> "DividedPowerSeries":
        return DividedPowerSeries([a * s for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, DividedPowerSeries):
            return self.mul(other)
        return self.scalar_mul(other)

    def __rmul__(self, other):
        return self.scalar_mul(other)

    def mul(self, other: "DividedPowerSeries") -> "DividedPowerSeries":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(len(a)):
            acc = None
            for k in range(n + 1):
                if not a[k] or not b[n - k]:
                    continue
                term = a[k] * b[n - k] * q_binomial(n, k)
                acc = term if acc is None else acc + term
            out.append(self._zero() if acc is None else acc)
        return DividedPowerSeries(out)

    def reciprocal(self) -> "DividedPowerSeries":
        a = self.coeffs
        try:
            inv0 = a[0].inverse()
        except (ZeroDivisionError, ValueError) as exc:
            raise NonInvertibleConstantTerm("constant term is not a unit") from exc
        b = [inv0]
        for n in range(1, len(a)):
            acc = None
            for k in range(n):
                if not b[k] or not a[n - k]:
                    continue
                term = b[k] * a[n - k] * q_binomial(n, k)
                acc = term if acc is None else acc + term
            b.append(self._zero() if acc is None else -(acc * inv0))
        return DividedPowerSeries(b)

    def __truediv__(self, other):
        if isinstance(other, DividedPowerSeries):
            return self.mul(other.reciprocal())
        if isinstance(other, (int, Fraction)):
            return self.scalar_mul(Fraction(1) / other)
        return self.scalar_mul(other.inverse())

    # substitutions ---------------------------------------------------------

    def scale_arg(self, lam) -> "DividedPowerSeries":
        """t -> lam * t."""
        out = []
        p = None
        for n, c in enumerate(self.coeffs):
            p = lam * 0 + 1 if n == 0 else p * lam
            out.append(c * p)
        return DividedPowerSeries(out)

    def divide_by_t(self) -> "DividedPowerSeries":
        if self.coeffs[0]:
            raise NonzeroConstantTerm("cannot divide by t: constant term is nonzero")
        if self.order < 1:
            raise ValueError("series of order 0 has nothing left after division by t")
        return DividedPowerSeries([self.coeffs[n + 1] * q_int(n + 1).inverse() for n in range(self.order)])

    def multiply_by_t(self) -> "DividedPowerSeries":
        """Exact shift t*a; the order grows by one."""
        return DividedPowerSeries([self._zero()] + [c * q_int(n + 1) for n, c in enumerate(self.coeffs)])

    def truncate(self, order: int) -> "DividedPowerSeries":
        if order > self.order:
            raise IndexBeyondOrder(f"cannot extend order {self.order} to {order}")
        return DividedPowerSeries(self.coeffs[: order + 1])


def ser_exp(kind, order: int) -> DividedPowerSeries:
    """e_q, E_q or the improved exponential, truncated at ``order``."""
    kind = ExpKind(kind)
    if order < 0:
        raise ValueError("order must be >= 0")
    if kind is ExpKind.SMALL_E:
        coeffs = [ONE] * (order + 1)
    elif kind is ExpKind.BIG_E:
        coeffs = [RationalFunction.monomial(n * (n - 1) // 2) for n in range(order + 1)]
    else:
        coeffs = [improved_weight(n) for n in range(order + 1)]
    return DividedPowerSeries(coeffs)
