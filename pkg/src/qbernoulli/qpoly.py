"""Sparse polynomials in x and y over Q(q)."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from .qcombinatorics import q_int
from .qfield import ONE, ZERO, RationalFunction, as_rf

__all__ = ["QPoly", "X", "Y"]

Monomial = Tuple[int, int]


class QPoly:
    """Polynomial sum c_ij x^i y^j with RationalFunction coefficients.

    Zero coefficients are never stored, so equality is dict equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, RationalFunction]] = None):
        clean: Dict[Monomial, RationalFunction] = {}
        if terms:
            for mono, c in terms.items():
                c = as_rf(c)
                if c:
                    clean[(int(mono[0]), int(mono[1]))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: Dict[Monomial, RationalFunction]) -> "QPoly":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, c) -> "QPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int = 0, c=1) -> "QPoly":
        return cls({(i, j): c})

    # queries ---------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, i: int, j: int = 0) -> RationalFunction:
        return self.terms.get((i, j), ZERO)

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self.terms)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.terms == other.terms
        if isinstance(other, (RationalFunction, int, Fraction)):
            return self == QPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"QPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda m: (-(m[0] + m[1]), -m[0])):
            c = self.terms[(i, j)]
            mono = "*".join(
                s for s in (_var("x", i), _var("y", j)) if s
            )
            cs = str(c)
            if not mono:
                parts.append(f"({cs})" if _needs_paren(cs) else cs)
            elif c == ONE:
                parts.append(mono)
            elif c == -ONE:
                parts.append(f"-{mono}")
            else:
                parts.append(f"({cs})*{mono}" if _needs_paren(cs) else f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # arithmetic ------------------------------------------------------------

    def __neg__(self):
        return QPoly._raw({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return QPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, QPoly):
            if not self.terms or not other.terms:
                return QPoly._raw({})
            out: Dict[Monomial, RationalFunction] = {}
            for (i1, j1), c1 in self.terms.items():
                for (i2, j2), c2 in other.terms.items():
                    m = (i1 + i2, j1 + j2)
                    p = c1 * c2
                    s = out.get(m)
                    out[m] = p if s is None else s + p
            return QPoly._raw({m: c for m, c in out.items() if c})
        try:
            s = as_rf(other)
        except TypeError:
            return NotImplemented
        if not s:
            return QPoly._raw({})
        if s == ONE:
            return self
        return QPoly._raw({m: c * s for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QPoly):
            return self * other.inverse()
        return self * as_rf(other).inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "QPoly":
        if not self.is_constant() or not self.terms:
            raise ZeroDivisionError("only nonzero constant polynomials are units")
        return QPoly.constant(self.coeff(0, 0).inverse())

    # substitutions ---------------------------------------------------------

    def scale(self, lam=1, mu=1) -> "QPoly":
        """Substitute x -> lam*x, y -> mu*y."""
        lam, mu = as_rf(lam), as_rf(mu)
        out = {}
        for (i, j), c in self.terms.items():
            v = c * lam**i * mu**j
            if v:
                out[(i, j)] = v
        return QPoly._raw(out)

    def scale_x(self, lam) -> "QPoly":
        return self.scale(lam, 1)

    def swap(self) -> "QPoly":
        return QPoly._raw({(j, i): c for (i, j), c in self.terms.items()})

    def as_y(self) -> "QPoly":
        """Rename x to y in a univariate polynomial."""
        if any(j for _, j in self.terms):
            raise ValueError("as_y expects a polynomial in x only")
        return self.swap()

    def eval(self, x0=0, y0=0) -> RationalFunction:
        x0, y0 = as_rf(x0), as_rf(y0)
        acc = ZERO
        for (i, j), c in self.terms.items():
            acc = acc + c * x0**i * y0**j
        return acc

    def subs_y(self, y0) -> "QPoly":
        y0 = as_rf(y0)
        out = QPoly._raw({})
        for (i, j), c in self.terms.items():
            out = out + QPoly({(i, 0): c * y0**j})
        return out

    def q_derivative(self, var: str = "x") -> "QPoly":
        """Jackson derivative: x^i -> [i]_q x^(i-1)."""
        if var not in ("x", "y"):
            raise ValueError("var must be 'x' or 'y'")
        out = {}
        for (i, j), c in self.terms.items():
            if var == "x" and i:
                out[(i - 1, j)] = c * q_int(i)
            elif var == "y" and j:
                out[(i, j - 1)] = c * q_int(j)
        return QPoly._raw(out)

    # q -> 1 and numeric views ----------------------------------------------

    def limit_q1(self) -> Dict[Monomial, Fraction]:
        out = {}
        for m, c in self.terms.items():
            v = c.limit_q1()
            if v:
                out[m] = v
        return out

    def eval_q(self, q0) -> Dict[Monomial, Fraction]:
        out = {}
        for m, c in self.terms.items():
            v = c.eval(q0)
            if v:
                out[m] = v
        return out

    def eval_numeric(self, q0, x0, y0=0) -> Fraction:
        x0, y0 = Fraction(x0), Fraction(y0)
        return sum((c.eval(q0) * x0**i * y0**j for (i, j), c in self.terms.items()), Fraction(0))

    # serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "monomials": [
                {"i": i, "j": j, "coeff": self.terms[(i, j)].to_json()}
                for (i, j) in sorted(self.terms)
            ]
        }

    @classmethod
    def from_json(cls, obj: dict) -> "QPoly":
        return cls({(m["i"], m["j"]): RationalFunction.from_json(m["coeff"]) for m in obj["monomials"]})


def _var(name: str, k: int) -> str:
    if k == 0:
        return ""
    return name if k == 1 else f"{name}^{k}"


def _needs_paren(s: str) -> bool:
    return " " in s


def _coerce(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, (RationalFunction, int, Fraction)):
        return QPoly.constant(x)
    return NotImplemented


X = QPoly.monomial(1, 0)
Y = QPoly.monomial(0, 1)
