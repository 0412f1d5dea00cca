"""Identity checks: both sides of every implemented relation computed exactly.

Every ``sides_*`` function returns ``(lhs, rhs)`` (or a list of such pairs
when one check covers several displays); :func:`run_check` turns that into a
:class:`CheckResult` whose discrepancy is the first nonzero ``lhs - rhs``.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple, Union

from .qcombinatorics import curly_binomial, improved_weight, minus_one_pochhammer, q_binomial, q_int
from .qfield import ZERO, RationalFunction
from .qnumbers import (
    POLY_FAMILIES,
    NumberFamily,
    classical_numbers,
    recurrence_residuals,
    tangent_from_genocchi,
)
from .qpoly import QPoly, X, Y
from .qpolynomials import DEFAULT_FAMILIES, Construction, QFamilies, classical_poly, ominus_poly, oplus_poly
from .qseries import DividedPowerSeries, ExpKind, ser_exp

__all__ = [
    "CheckResult",
    "SuiteConfig",
    "SuiteReport",
    "ConfigInvalid",
    "CHECKS",
    "run_check",
    "build_grid",
    "run_suite",
    "NumericSample",
    "numeric_check",
    "numeric_samples",
    "check_pairs",
]

Value = Union[QPoly, RationalFunction]
Pair = Tuple[Value, Value]

B, E, G, T = NumberFamily.BERNOULLI, NumberFamily.EULER, NumberFamily.GENOCCHI, NumberFamily.TANGENT


class ConfigInvalid(ValueError):
    pass


def _c(v) -> RationalFunction:
    return RationalFunction.constant(Fraction(v))


def _univ_y(fam: QFamilies, family, k: int, scale=1) -> QPoly:
    """P_k(scale * y) for a univariate family polynomial."""
    return fam.univariate(family, k).as_y().scale(1, scale)


# ---------------------------------------------------------------------------
# number-level checks


def sides_number_recurrence(fam: QFamilies, family, max_n: int) -> List[Pair]:
    table = fam.table(family, max_n, source="series")
    return [(r, ZERO) for _, r in recurrence_residuals(family, table.values)]


def sides_dual_path(fam: QFamilies, family, max_n: int) -> List[Pair]:
    rec = fam.table(family, max_n, source="recurrence").values
    ser = fam.table(family, max_n, source="series").values
    return list(zip(rec, ser))


def sides_parity(fam: QFamilies, family, max_n: int) -> List[Pair]:
    family = NumberFamily.parse(family)
    vals = fam.table(family, max_n).values
    if family is E:
        idx = range(2, max_n + 1, 2)
    elif family is T:
        idx = range(0, max_n + 1, 2)
    else:
        idx = range(3, max_n + 1, 2)
    return [(vals[i], ZERO) for i in idx]


def sides_classical_numbers(fam: QFamilies, family, max_n: int) -> List[Pair]:
    vals = fam.table(family, max_n).values
    classical = classical_numbers(family, max_n)
    return [(_c(v.limit_q1()), _c(c)) for v, c in zip(vals, classical)]


def sides_classical_poly(fam: QFamilies, family, n: int) -> Pair:
    lim = fam.bivariate(family, n).limit_q1()
    return QPoly(lim), QPoly(classical_poly(family, n, bivariate=True))


def sides_tangent(fam: QFamilies, max_odd: int) -> List[Pair]:
    tab = fam.table(T, max_odd).values
    gen = fam.table(G, max_odd + 1).values
    pairs: List[Pair] = []
    for i in range(max_odd + 1):
        if i % 2 == 0:
            pairs.append((tab[i], ZERO))
        else:
            n = i // 2
            c = tab[i] if n % 2 == 0 else -tab[i]
            pairs.append((c, tangent_from_genocchi(n, gen)))
    return pairs


# ---------------------------------------------------------------------------
# q-exponential expansions


def sides_exp_product(fam: QFamilies, n: int) -> Pair:
    e = ser_exp(ExpKind.IMPROVED, n)
    ex = DividedPowerSeries([X**k * c for k, c in enumerate(e.coeffs)])
    ey = DividedPowerSeries([Y**k * c for k, c in enumerate(e.coeffs)])
    return (ex * ey).coeffs[n], oplus_poly(n)


def _poch_poly(n: int) -> QPoly:
    out = QPoly.constant(1)
    for j in range(n):
        out = out * (1 - X * RationalFunction.monomial(j))
    return out


def sides_qbinomial_formula(fam: QFamilies, n: int) -> List[Pair]:
    lhs = _poch_poly(n)
    rhs = QPoly({(k, 0): q_binomial(n, k) * RationalFunction.monomial(k * (k - 1) // 2, (-1) ** k) for k in range(n + 1)})
    # the (1 (-)_q x)^n display only collapses to (1 - x)^n at q = 1
    classical = QPoly({(k, 0): (-1) ** k * _binom(n, k) for k in range(n + 1)})
    defined = QPoly(ominus_poly(n).swap().subs_y(1).limit_q1())
    printed = QPoly(_ominus_printed(n).limit_q1())
    return [(lhs, rhs), (defined, classical), (printed, classical)]


def _binom(n: int, k: int) -> int:
    from math import comb

    return comb(n, k)


def _ominus_printed(n: int) -> QPoly:
    return QPoly({(k, 0): q_binomial(n, k) * improved_weight(k) * (-1) ** k for k in range(n + 1)})


def sides_ominus_as_printed(fam: QFamilies, n: int) -> Pair:
    """(1 (-)_q x)^n from the q-addition definition vs the printed expansion."""
    return ominus_poly(n).swap().subs_y(1), _ominus_printed(n)


# ---------------------------------------------------------------------------
# polynomial identities


def sides_addition(fam: QFamilies, family, n: int) -> List[Pair]:
    a = fam.bivariate(family, n, Construction.Q_ADDITION)
    b = fam.bivariate(family, n, Construction.UNIVARIATE_PLUS_Y)
    c = fam.bivariate(family, n, Construction.SERIES)
    return [(a, b), (a, c)]


def sides_specialization(fam: QFamilies, family, n: int) -> List[Pair]:
    biv = fam.bivariate(family, n)
    at1 = QPoly()
    for k in range(n + 1):
        at1 = at1 + fam.univariate(family, k) * (q_binomial(n, k) * improved_weight(n - k))
    return [(biv.subs_y(0), fam.univariate(family, n)), (biv.subs_y(1), at1)]


def sides_symmetry(fam: QFamilies, family, n: int) -> Pair:
    biv = fam.bivariate(family, n)
    return biv, biv.swap()


def sides_difference(fam: QFamilies, family, n: int) -> Pair:
    family = NumberFamily.parse(family)
    at1 = fam.bivariate(family, n).subs_y(1)
    p = fam.univariate(family, n)
    if family is B:
        return at1 - p, QPoly.monomial(n - 1, 0, improved_weight(n - 1) * q_int(n))
    if family is E:
        return at1 + p, QPoly.monomial(n, 0, improved_weight(n) * 2)
    return at1 + p, QPoly.monomial(n - 1, 0, improved_weight(n - 1) * q_int(n) * 2)


def sides_derivative(fam: QFamilies, family, n: int) -> Pair:
    p = fam.univariate(family, n)
    prev = fam.univariate(family, n - 1)
    rhs = (prev + prev.scale_x(RationalFunction.monomial(1))) * (q_int(n) * Fraction(1, 2))
    return p.q_derivative("x"), rhs


def sides_inversion(fam: QFamilies, family, n: int) -> Pair:
    return fam.monomial_expansion(family, n), X**n


def sides_inversion_as_printed(fam: QFamilies, family, n: int) -> Pair:
    """Bernoulli inversion with the printed [n]_q divisor instead of [n+1]_q."""
    fixed = fam.monomial_expansion(B, n)
    return fixed * (q_int(n + 1) / q_int(n)), X**n


def sides_convolution(fam: QFamilies, family, n: int) -> Pair:
    family = NumberFamily.parse(family)
    s = QPoly()
    for k in range(n + 1):
        s = s + fam.bivariate(family, k) * (q_binomial(n, k) * improved_weight(n - k))
    p = fam.bivariate(family, n)
    if family is B:
        return s - p, oplus_poly(n - 1) * q_int(n)
    if family is E:
        return s + p, oplus_poly(n) * 2
    return s + p, oplus_poly(n - 1) * (q_int(n) * 2)


# ---------------------------------------------------------------------------
# Srivastava-Pinter type relations


def sides_sp1(fam: QFamilies, n: int, m: int) -> List[Pair]:
    lhs = fam.bivariate(B, n)
    r1 = QPoly()
    r2 = QPoly()
    for k in range(n + 1):
        bx = fam.univariate(B, k)
        inner = QPoly()
        for j in range(k + 1):
            inner = inner + fam.univariate(B, j) * (curly_binomial(k, j) * _c(Fraction(1, m ** (k - j))))
        bxm = fam.bivariate(B, k).subs_y(Fraction(1, m))
        w = q_binomial(n, k) * _c(Fraction(1, 2) * Fraction(m) ** (k - n))
        ey = _univ_y(fam, E, n - k, m)
        r1 = r1 + (bx + inner) * ey * w
        r2 = r2 + (bx + bxm) * ey * w
    return [(lhs, r1), (r1, r2)]


def sides_cheon(fam: QFamilies, n: int) -> Pair:
    lhs = fam.bivariate(B, n)
    rhs = QPoly()
    for k in range(n + 1):
        bracket = fam.univariate(B, k)
        if k >= 1:
            # [0]_q = 0 kills the k = 0 term, so (-1;q)_{-1} is never needed
            bracket = bracket + QPoly.monomial(k - 1, 0, minus_one_pochhammer(k - 1) * q_int(k) * Fraction(1, 2**k))
        rhs = rhs + bracket * _univ_y(fam, E, n - k) * q_binomial(n, k)
    return lhs, rhs


def sides_sp2(fam: QFamilies, n: int, m: int, variant: str = "proofDerived") -> Pair:
    if variant not in ("proofDerived", "asPrinted"):
        raise ValueError(f"unknown variant {variant!r}")
    lhs = fam.bivariate(E, n)
    rhs = QPoly()
    inner_at_x = variant == "asPrinted"
    for k in range(n + 2):
        inner = QPoly()
        for j in range(k + 1):
            ej = fam.univariate(E, j) if inner_at_x else _univ_y(fam, E, j)
            inner = inner + ej * (curly_binomial(k, j) * _c(Fraction(1, m ** (k - j))))
        inner = inner - _univ_y(fam, E, k)
        bmx = fam.univariate(B, n + 1 - k).scale_x(m)
        rhs = rhs + inner * bmx * (q_binomial(n + 1, k) * _c(Fraction(1, m ** (n + 1 - k))))
    scale = q_int(n + 1).inverse()
    if variant == "proofDerived":
        # t/(E(t/m) - 1) = m * B-kernel(t/m): the printed display drops this m
        scale = scale * m
    return lhs, rhs * scale


def sides_sp3(fam: QFamilies, n: int, m: int, which: str = "first") -> Pair:
    if which not in ("first", "second"):
        raise ValueError(f"unknown display {which!r}")
    inner_fam, outer_fam = (G, B) if which == "first" else (B, G)
    sign = -1 if which == "first" else 1
    lhs = fam.bivariate(G if which == "first" else B, n)
    rhs = QPoly()
    for k in range(n + 2):
        inner = QPoly()
        for j in range(k + 1):
            w = q_binomial(k, j) * improved_weight(k - j) * _c(Fraction(1, m ** (k - j)))
            inner = inner + fam.univariate(inner_fam, j) * w
        inner = inner + fam.univariate(inner_fam, k) * sign
        outer = _univ_y(fam, outer_fam, n + 1 - k, m)
        rhs = rhs + inner * outer * (q_binomial(n + 1, k) * _c(Fraction(m) ** (k - n)))
    scale = q_int(n + 1).inverse()
    if which == "second":
        scale = scale * Fraction(1, 2)
    return lhs, rhs * scale


# ---------------------------------------------------------------------------
# results and the suite


@dataclass(frozen=True)
class CheckSpec:
    name: str
    fn: Callable
    gating: bool = True


CHECKS: Dict[str, CheckSpec] = {
    s.name: s
    for s in [
        CheckSpec("number_recurrence", sides_number_recurrence),
        CheckSpec("dual_path", sides_dual_path),
        CheckSpec("parity", sides_parity),
        CheckSpec("classical_limit_numbers", sides_classical_numbers),
        CheckSpec("classical_limit_poly", sides_classical_poly),
        CheckSpec("tangent_genocchi", sides_tangent),
        CheckSpec("exp_product", sides_exp_product),
        CheckSpec("qbinomial_formula", sides_qbinomial_formula),
        CheckSpec("ominus_display_as_printed", sides_ominus_as_printed, gating=False),
        CheckSpec("addition", sides_addition),
        CheckSpec("specialization", sides_specialization),
        CheckSpec("symmetry", sides_symmetry),
        CheckSpec("difference", sides_difference),
        CheckSpec("derivative", sides_derivative),
        CheckSpec("inversion", sides_inversion),
        CheckSpec("inversion_as_printed", sides_inversion_as_printed, gating=False),
        CheckSpec("convolution", sides_convolution),
        CheckSpec("sp1", sides_sp1),
        CheckSpec("cheon", sides_cheon),
        CheckSpec("sp2", sides_sp2),
        CheckSpec("sp2_as_printed", lambda fam, n, m: sides_sp2(fam, n, m, "asPrinted"), gating=False),
        CheckSpec("sp3", sides_sp3),
    ]
}


@dataclass
class CheckResult:
    name: str
    params: Dict[str, object]
    status: str
    discrepancy: Value
    gating: bool = True
    detail: str = ""
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "status": self.status,
            "gating": self.gating,
            "detail": self.detail,
            "discrepancy": _value_to_json(self.discrepancy),
        }

    @classmethod
    def from_json(cls, obj: dict, elapsed_ms: float = 0.0) -> "CheckResult":
        return cls(
            name=obj["name"],
            params=dict(obj["params"]),
            status=obj["status"],
            discrepancy=_value_from_json(obj["discrepancy"]),
            gating=obj["gating"],
            detail=obj.get("detail", ""),
            elapsed_ms=elapsed_ms,
        )


def _value_to_json(v: Value) -> dict:
    if isinstance(v, QPoly):
        return {"type": "qpoly", **v.to_json()}
    return {"type": "rational_function", **v.to_json()}


def _value_from_json(obj: dict) -> Value:
    if obj["type"] == "qpoly":
        return QPoly.from_json(obj)
    return RationalFunction.from_json(obj)


def run_check(name: str, fam: Optional[QFamilies] = None, **params) -> CheckResult:
    spec = CHECKS[name]
    fam = fam or DEFAULT_FAMILIES
    t0 = time.perf_counter()
    out = spec.fn(fam, **params)
    pairs = out if isinstance(out, list) else [out]
    discrepancy: Value = ZERO
    detail = ""
    for idx, (lhs, rhs) in enumerate(pairs):
        d = lhs - rhs
        if d:
            discrepancy = d
            detail = f"first nonzero discrepancy in part {idx}"
            break
    elapsed = (time.perf_counter() - t0) * 1000.0
    status = "fail" if discrepancy else "pass"
    clean = {k: (v.value if isinstance(v, NumberFamily) else v) for k, v in params.items()}
    return CheckResult(name, clean, status, discrepancy, spec.gating, detail, elapsed)


@dataclass
class SuiteConfig:
    max_n: int = 12
    numbers_max_n: int = 24
    sp_max_n: int = 8
    m_values: Tuple[int, ...] = (1, 2, 3)
    sp1_m_values: Tuple[int, ...] = (1, 2, 3, 5)
    tangent_max_odd: int = 15
    limit_numbers_max_n: int = 16
    limit_poly_max_n: int = 10
    fault: Optional[Tuple[str, int, Fraction]] = None

    def validate(self) -> None:
        for name in ("max_n", "numbers_max_n", "sp_max_n", "limit_numbers_max_n", "limit_poly_max_n"):
            if getattr(self, name) < 0:
                raise ConfigInvalid(f"{name} must be >= 0")
        if self.tangent_max_odd < 1:
            raise ConfigInvalid("tangent_max_odd must be >= 1")
        if not self.m_values or not self.sp1_m_values:
            raise ConfigInvalid("m-value lists must be nonempty")
        if any(m < 1 for m in (*self.m_values, *self.sp1_m_values)):
            raise ConfigInvalid("m values must be positive integers")
        if self.fault is not None:
            fam, idx, delta = self.fault
            try:
                NumberFamily.parse(fam)
            except ValueError as exc:
                raise ConfigInvalid(f"unknown fault family {fam!r}") from exc
            if idx < 0 or not delta:
                raise ConfigInvalid("fault needs index >= 0 and a nonzero delta")

    def to_json(self) -> dict:
        d = asdict(self)
        d["m_values"] = list(self.m_values)
        d["sp1_m_values"] = list(self.sp1_m_values)
        if self.fault is not None:
            fam, idx, delta = self.fault
            d["fault"] = {"family": NumberFamily.parse(fam).value, "index": idx, "delta": str(Fraction(delta))}
        return d


def build_grid(config: SuiteConfig) -> List[Tuple[str, Dict[str, object]]]:
    grid: List[Tuple[str, Dict[str, object]]] = []
    N, S = config.max_n, config.sp_max_n
    for f in POLY_FAMILIES:
        grid.append(("number_recurrence", {"family": f, "max_n": config.numbers_max_n}))
        grid.append(("dual_path", {"family": f, "max_n": config.numbers_max_n}))
        grid.append(("parity", {"family": f, "max_n": config.numbers_max_n}))
        grid.append(("classical_limit_numbers", {"family": f, "max_n": config.limit_numbers_max_n}))
    grid.append(("parity", {"family": T, "max_n": config.numbers_max_n}))
    grid.append(("classical_limit_numbers", {"family": T, "max_n": config.limit_numbers_max_n}))
    grid.append(("tangent_genocchi", {"max_odd": config.tangent_max_odd}))
    for n in range(N + 1):
        grid.append(("exp_product", {"n": n}))
        grid.append(("qbinomial_formula", {"n": n}))
        grid.append(("ominus_display_as_printed", {"n": n}))
    for f in POLY_FAMILIES:
        for n in range(config.limit_poly_max_n + 1):
            grid.append(("classical_limit_poly", {"family": f, "n": n}))
        for n in range(N + 1):
            grid.append(("addition", {"family": f, "n": n}))
            grid.append(("specialization", {"family": f, "n": n}))
            grid.append(("symmetry", {"family": f, "n": n}))
        lo = 0 if f is E else 1
        for n in range(lo, N + 1):
            grid.append(("difference", {"family": f, "n": n}))
            grid.append(("convolution", {"family": f, "n": n}))
        for n in range(1, N + 1):
            grid.append(("derivative", {"family": f, "n": n}))
        for n in range(N + 1):
            grid.append(("inversion", {"family": f, "n": n}))
    for n in range(1, N + 1):
        grid.append(("inversion_as_printed", {"family": B, "n": n}))
    for n in range(S + 1):
        for m in config.sp1_m_values:
            grid.append(("sp1", {"n": n, "m": m}))
        grid.append(("cheon", {"n": n}))
        for m in config.m_values:
            grid.append(("sp2", {"n": n, "m": m}))
            grid.append(("sp2_as_printed", {"n": n, "m": m}))
            grid.append(("sp3", {"n": n, "m": m, "which": "first"}))
            grid.append(("sp3", {"n": n, "m": m, "which": "second"}))
    return grid


@dataclass
class SuiteReport:
    config: dict
    results: List[CheckResult] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        passed = sum(r.passed for r in self.results)
        gating_fail = sum(1 for r in self.results if r.gating and not r.passed)
        return {
            "pass": passed,
            "fail": len(self.results) - passed,
            "gating_fail": gating_fail,
            "informational_fail": sum(1 for r in self.results if not r.gating and not r.passed),
        }

    @property
    def ok(self) -> bool:
        return self.summary["gating_fail"] == 0

    def data(self) -> dict:
        return {
            "config": self.config,
            "results": [r.to_json() for r in self.results],
            "summary": self.summary,
        }

    def to_json(self, timings: bool = True) -> dict:
        out = self.data()
        if timings:
            out["metadata"] = {
                "elapsed_ms": [round(r.elapsed_ms, 3) for r in self.results],
                "total_ms": round(sum(r.elapsed_ms for r in self.results), 3),
            }
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "SuiteReport":
        times = obj.get("metadata", {}).get("elapsed_ms") or [0.0] * len(obj["results"])
        return cls(obj["config"], [CheckResult.from_json(r, t) for r, t in zip(obj["results"], times)])


def run_suite(config: Optional[SuiteConfig] = None, fam: Optional[QFamilies] = None) -> SuiteReport:
    config = config or SuiteConfig()
    config.validate()
    if fam is None:
        fam = DEFAULT_FAMILIES
        if config.fault is not None:
            family, idx, delta = config.fault
            fam = fam.with_fault(family, idx, Fraction(delta))
    report = SuiteReport(config.to_json())
    for name, params in build_grid(config):
        report.results.append(run_check(name, fam, **params))
    return report


@dataclass(frozen=True)
class NumericSample:
    """Both sides of one identity part evaluated at (q0, x0, y0)."""

    part: int
    lhs: Fraction
    rhs: Fraction
    discrepancy: Fraction

    @property
    def consistent(self) -> bool:
        return self.lhs - self.rhs == self.discrepancy


def _num(v: Value, q0, x0, y0) -> Fraction:
    if isinstance(v, QPoly):
        return v.eval_numeric(q0, x0, y0)
    return v.eval(q0)


def check_pairs(name: str, fam: Optional[QFamilies] = None, **params) -> List[Pair]:
    """The (lhs, rhs) pairs behind a check, before any comparison."""
    out = CHECKS[name].fn(fam or DEFAULT_FAMILIES, **params)
    return out if isinstance(out, list) else [out]


def numeric_samples(pairs: List[Pair], q0, x0, y0) -> List[NumericSample]:
    """Evaluate every pair at (q0, x0, y0); raises PoleAtPoint if q0 is a pole."""
    q0, x0, y0 = Fraction(q0), Fraction(x0), Fraction(y0)
    return [
        NumericSample(i, _num(lhs, q0, x0, y0), _num(rhs, q0, x0, y0), _num(lhs - rhs, q0, x0, y0))
        for i, (lhs, rhs) in enumerate(pairs)
    ]


def numeric_check(name: str, q0, x0, y0, fam: Optional[QFamilies] = None, **params) -> List[NumericSample]:
    return numeric_samples(check_pairs(name, fam, **params), q0, x0, y0)
