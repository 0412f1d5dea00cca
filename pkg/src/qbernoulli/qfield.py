"""Exact arithmetic in Q(q), the field of rational functions in one indeterminate.

Polynomials are tuples of Python ints in ascending powers of q; the empty
tuple is the zero polynomial. A :class:`RationalFunction` keeps numerator and
denominator coprime in Z[q] with a positive leading denominator coefficient,
so two values are equal exactly when their representations are.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Optional, Sequence, Tuple, Union

__all__ = [
    "IntPoly",
    "RationalFunction",
    "ZeroDenominator",
    "PoleAtPoint",
    "PoleAtOne",
    "ZeroToNegativePower",
    "rf_make",
    "rf_eval",
    "rf_limit_q1",
    "as_rf",
    "Q",
    "ZERO",
    "ONE",
]

Coeffs = Tuple[int, ...]


class ZeroDenominator(ZeroDivisionError):
    pass


class ZeroToNegativePower(ZeroDivisionError):
    pass


class PoleAtPoint(ZeroDivisionError):
    pass


class PoleAtOne(PoleAtPoint):
    pass


# ---------------------------------------------------------------------------
# dense Z[q] kernels


def _strip(c: Sequence[int]) -> Coeffs:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _add(a: Coeffs, b: Coeffs) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return _strip(out)


def _neg(a: Coeffs) -> Coeffs:
    return tuple(-v for v in a)


def _sub(a: Coeffs, b: Coeffs) -> Coeffs:
    return _add(a, _neg(b))


def _scale(a: Coeffs, k: int) -> Coeffs:
    if not k:
        return ()
    return tuple(k * v for v in a)


def _pack(a: Coeffs, bits: int) -> int:
    h = 0
    for v in reversed(a):
        h = (h << bits) + v
    return h


def _unpack(h: int, bits: int, length: int) -> list:
    base = 1 << bits
    half = base >> 1
    mask = base - 1
    out = []
    for _ in range(length):
        r = h & mask
        if r >= half:
            r -= base
        out.append(r)
        h = (h - r) >> bits
    return out


def _mul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return ()
    if len(a) == 1:
        return _scale(b, a[0])
    if len(b) == 1:
        return _scale(a, b[0])
    if len(a) < 12 or len(b) < 12:
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return _strip(out)
    # Kronecker substitution: evaluate at 2**bits, multiply integers, unpack.
    ma = max(abs(v) for v in a)
    mb = max(abs(v) for v in b)
    bits = (ma * mb * min(len(a), len(b))).bit_length() + 2
    h = _pack(a, bits) * _pack(b, bits)
    return _strip(_unpack(h, bits, len(a) + len(b) - 1))


def _content(a: Coeffs) -> int:
    c = 0
    for v in a:
        c = gcd(c, v)
        if c == 1:
            break
    return c


def _primitive(a: Coeffs) -> Coeffs:
    c = _content(a)
    if c in (0, 1):
        return a
    return tuple(v // c for v in a)


def _divmod(f: Coeffs, g: Coeffs) -> Tuple[Coeffs, Coeffs]:
    """Division in Z[q]; stops early when the leading coefficient does not divide.

    A zero remainder certifies exact division.
    """
    dg = len(g) - 1
    lc = g[-1]
    r = list(f)
    quo = [0] * max(len(f) - dg, 0)
    while len(r) - 1 >= dg and r:
        c, m = divmod(r[-1], lc)
        if m:
            break
        k = len(r) - 1 - dg
        quo[k] = c
        for i, v in enumerate(g):
            r[k + i] -= c * v
        r = list(_strip(r))
    return _strip(quo), tuple(r)


def _exact_div(f: Coeffs, g: Coeffs) -> Coeffs:
    quo, rem = _divmod(f, g)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return quo


def _eval_int(a: Coeffs, x: int) -> int:
    h = 0
    for v in reversed(a):
        h = h * x + v
    return h


def _interpolate(h: int, x: int) -> Coeffs:
    out = []
    half = x // 2
    while h:
        g = h % x
        if g > half:
            g -= x
        out.append(g)
        h = (h - g) // x
    return _strip(out)


def _prem(f: Coeffs, g: Coeffs) -> Coeffs:
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return f
    lc = g[-1]
    r = list(f)
    for _ in range(df - dg + 1):
        if len(r) - 1 < dg:
            r = [lc * v for v in r]
            continue
        c = r[-1]
        k = len(r) - 1 - dg
        r = [lc * v for v in r]
        for i, v in enumerate(g):
            r[k + i] -= c * v
        r = list(_strip(r))
    return tuple(r)


def _prs_gcd(f: Coeffs, g: Coeffs) -> Coeffs:
    c = gcd(_content(f), _content(g))
    f, g = _primitive(f), _primitive(g)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _prem(f, g)
        f, g = g, _primitive(r)
    h = _scale(_primitive(f), c)
    return _neg(h) if h[-1] < 0 else h


def _heu_gcd(f: Coeffs, g: Coeffs) -> Optional[Coeffs]:
    cf, cg = _content(f), _content(g)
    c = gcd(cf, cg)
    f = tuple(v // cf for v in f)
    g = tuple(v // cg for v in g)
    nf = max(abs(v) for v in f)
    ng = max(abs(v) for v in g)
    b = 2 * min(nf, ng) + 29
    x = max(min(b, 99 * isqrt(b)), 2 * min(nf // abs(f[-1]), ng // abs(g[-1])) + 4)
    for _ in range(6):
        ff, gg = _eval_int(f, x), _eval_int(g, x)
        if ff and gg:
            h = gcd(ff, gg)
            for cand in (_primitive(_interpolate(h, x)),):
                if cand and cand[-1] < 0:
                    cand = _neg(cand)
                if cand:
                    _, r1 = _divmod(f, cand)
                    if not r1:
                        _, r2 = _divmod(g, cand)
                        if not r2:
                            return _scale(cand, c)
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def _gcd(f: Coeffs, g: Coeffs) -> Coeffs:
    """gcd in Z[q] with positive leading coefficient."""
    if not f:
        return g if not g or g[-1] > 0 else _neg(g)
    if not g:
        return f if f[-1] > 0 else _neg(f)
    if len(f) == 1 or len(g) == 1:
        return (gcd(_content(f), _content(g)),)
    h = _heu_gcd(f, g)
    if h is None:
        h = _prs_gcd(f, g)
    return h


# ---------------------------------------------------------------------------
# public types


@dataclass(frozen=True)
class IntPoly:
    """Polynomial in q with integer coefficients, ascending powers."""

    coeffs: Coeffs = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(tuple(int(v) for v in self.coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(_add(self.coeffs, other.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(_sub(self.coeffs, other.coeffs))

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(_mul(self.coeffs, other.coeffs))

    def __neg__(self) -> "IntPoly":
        return IntPoly(_neg(self.coeffs))

    def gcd(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(_gcd(self.coeffs, other.coeffs))

    def __call__(self, x):
        h = 0
        for v in reversed(self.coeffs):
            h = h * x + v
        return h


Scalar = Union["RationalFunction", int, Fraction]


def _reduce(num: Coeffs, den: Coeffs) -> Tuple[Coeffs, Coeffs]:
    if not den:
        raise ZeroDenominator("zero denominator")
    if not num:
        return (), (1,)
    if len(den) == 1 and len(num) == 1:
        f = Fraction(num[0], den[0])
        return (f.numerator,), (f.denominator,)
    g = _gcd(num, den)
    if g != (1,):
        if len(g) == 1:
            k = g[0]
            num = tuple(v // k for v in num)
            den = tuple(v // k for v in den)
        else:
            num = _exact_div(num, g)
            den = _exact_div(den, g)
    if den[-1] < 0:
        num, den = _neg(num), _neg(den)
    return num, den


class RationalFunction:
    """Element of Q(q) in canonical reduced form.

    Arithmetic accepts other rational functions as well as ints or Fractions.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num: Iterable[int] = (), den: Iterable[int] = (1,), _canonical: bool = False):
        num = tuple(num)
        den = tuple(den)
        if not _canonical:
            num, den = _reduce(_strip(num), _strip(den))
        self._num = num
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: Coeffs, den: Coeffs) -> "RationalFunction":
        obj = cls.__new__(cls)
        obj._num = num
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: Union[int, Fraction]) -> "RationalFunction":
        c = Fraction(c)
        if not c:
            return cls._raw((), (1,))
        return cls._raw((c.numerator,), (c.denominator,))

    @classmethod
    def monomial(cls, k: int, coeff: Union[int, Fraction] = 1) -> "RationalFunction":
        """coeff * q**k; negative k gives coeff / q**|k|."""
        c = Fraction(coeff)
        if not c:
            return cls._raw((), (1,))
        if k >= 0:
            return cls._raw((0,) * k + (c.numerator,), (c.denominator,))
        return cls._raw((c.numerator,), (0,) * (-k) + (c.denominator,))

    @property
    def num(self) -> IntPoly:
        return IntPoly(self._num)

    @property
    def den(self) -> IntPoly:
        return IntPoly(self._den)

    @property
    def num_coeffs(self) -> Coeffs:
        return self._num if self._num else (0,)

    @property
    def den_coeffs(self) -> Coeffs:
        return self._den

    def is_zero(self) -> bool:
        return not self._num

    def is_constant(self) -> bool:
        return len(self._num) <= 1 and len(self._den) == 1

    def __bool__(self):
        return bool(self._num)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self == RationalFunction.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def __repr__(self):
        return f"RationalFunction({list(self.num_coeffs)}, {list(self._den)})"

    def __str__(self):
        n = _poly_str(self._num)
        if self._den == (1,):
            return n
        d = _poly_str(self._den)
        if len(self._num) > 1 and not _is_monomial(self._num):
            n = f"({n})"
        if len(self._den) > 1 and not _is_monomial(self._den):
            d = f"({d})"
        return f"{n}/{d}"

    # arithmetic ------------------------------------------------------------

    def __neg__(self):
        return RationalFunction._raw(_neg(self._num), self._den)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        if self._den == other._den:
            num, den = _reduce(_add(self._num, other._num), self._den)
        elif len(self._den) == 1 and len(other._den) == 1:
            a, b = self._den[0], other._den[0]
            l = a * b // gcd(a, b)
            num = _add(_scale(self._num, l // a), _scale(other._num, l // b))
            num, den = _reduce(num, (l,))
        else:
            num = _add(_mul(self._num, other._den), _mul(other._num, self._den))
            num, den = _reduce(num, _mul(self._den, other._den))
        return RationalFunction._raw(num, den)

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
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._num or not other._num:
            return ZERO
        # cross-cancel before multiplying keeps operands small
        g1 = _gcd(self._num, other._den)
        g2 = _gcd(other._num, self._den)
        n1, d2 = self._num, other._den
        if g1 != (1,):
            n1, d2 = _exact_div(n1, g1), _exact_div(d2, g1)
        n2, d1 = other._num, self._den
        if g2 != (1,):
            n2, d1 = _exact_div(n2, g2), _exact_div(d1, g2)
        num, den = _mul(n1, n2), _mul(d1, d2)
        if den[-1] < 0:
            num, den = _neg(num), _neg(den)
        return RationalFunction._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self._num:
            raise ZeroDivisionError("inverse of zero")
        num, den = self._den, self._num
        if den[-1] < 0:
            num, den = _neg(num), _neg(den)
        return RationalFunction._raw(num, den)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self._num:
                raise ZeroToNegativePower("zero to a negative power")
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # evaluation ------------------------------------------------------------

    def eval(self, q0: Union[int, Fraction]) -> Fraction:
        q0 = Fraction(q0)
        d = _eval_fraction(self._den, q0)
        if not d:
            raise PoleAtPoint(f"pole at q = {q0}")
        return _eval_fraction(self._num, q0) / d

    def limit_q1(self) -> Fraction:
        d = sum(self._den)
        if not d:
            raise PoleAtOne("denominator vanishes at q = 1")
        return Fraction(sum(self._num), d)

    # serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {"num": [str(v) for v in self.num_coeffs], "den": [str(v) for v in self._den]}

    @classmethod
    def from_json(cls, obj: dict) -> "RationalFunction":
        return cls([int(v) for v in obj["num"]], [int(v) for v in obj["den"]])


def _eval_fraction(a: Coeffs, x: Fraction) -> Fraction:
    # Horner on numerator/denominator separately to stay in integers
    p, d = x.numerator, x.denominator
    n = len(a)
    if not n:
        return Fraction(0)
    h = 0
    for i, v in enumerate(reversed(a)):
        h = h * p + v * d**i
    return Fraction(h, d ** (n - 1))


def _is_monomial(a: Coeffs) -> bool:
    return sum(1 for v in a if v) == 1


def _poly_str(a: Coeffs) -> str:
    if not a:
        return "0"
    terms = []
    for k in range(len(a) - 1, -1, -1):
        v = a[k]
        if not v:
            continue
        mag = abs(v)
        if k == 0:
            body = str(mag)
        else:
            var = "q" if k == 1 else f"q^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        sign = "-" if v < 0 else "+"
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _coerce(x) -> "RationalFunction":
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction.constant(x)
    return NotImplemented


def as_rf(x: Scalar) -> RationalFunction:
    r = _coerce(x)
    if r is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to RationalFunction")
    return r


def rf_make(num: Union[IntPoly, Sequence[int]], den: Union[IntPoly, Sequence[int]] = (1,)) -> RationalFunction:
    if isinstance(num, IntPoly):
        num = num.coeffs
    if isinstance(den, IntPoly):
        den = den.coeffs
    return RationalFunction(num, den)


def rf_eval(a: RationalFunction, q0: Union[int, Fraction]) -> Fraction:
    return a.eval(q0)


def rf_limit_q1(a: RationalFunction) -> Fraction:
    return a.limit_q1()


ZERO = RationalFunction._raw((), (1,))
ONE = RationalFunction._raw((1,), (1,))
Q = RationalFunction._raw((0, 1), (1,))
