from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qbernoulli.qcombinatorics import improved_weight, minus_one_pochhammer, q_int
from qbernoulli.qfield import ONE, ZERO, RationalFunction, rf_make
from qbernoulli.qpoly import QPoly, X, Y
from qbernoulli.qseries import (
    DividedPowerSeries,
    ExpKind,
    NonInvertibleConstantTerm,
    NonzeroConstantTerm,
    OrderMismatch,
    ser_exp,
)

from conftest import rational_functions

N = 8


def series(coeffs):
    return DividedPowerSeries([RationalFunction.constant(c) if not isinstance(c, RationalFunction) else c for c in coeffs])


def test_exp_kinds():
    e = ser_exp(ExpKind.IMPROVED, N)
    assert e.coeffs[:3] == (ONE, ONE, rf_make([1, 1], [2]))
    assert all(c == ONE for c in ser_exp(ExpKind.SMALL_E, N).coeffs)
    assert ser_exp(ExpKind.BIG_E, N).coeff(3) == RationalFunction.monomial(3)


def test_exp_product_rule_degree_two():
    e = ser_exp(ExpKind.IMPROVED, 2)
    ex = DividedPowerSeries([X**k * c for k, c in enumerate(e.coeffs)])
    ey = DividedPowerSeries([Y**k * c for k, c in enumerate(e.coeffs)])
    h = rf_make([1, 1], [2])
    expected = QPoly({(2, 0): h, (1, 1): rf_make([1, 1]), (0, 2): h})
    assert (ex * ey).coeffs[2] == expected


def test_improved_exp_is_small_e_times_big_e_at_half():
    lhs = ser_exp(ExpKind.IMPROVED, N)
    rhs = ser_exp(ExpKind.SMALL_E, N).scale_arg(Fraction(1, 2)) * ser_exp(ExpKind.BIG_E, N).scale_arg(Fraction(1, 2))
    assert lhs == rhs


def test_unit():
    a = ser_exp(ExpKind.IMPROVED, N)
    assert a.one() * a == a


def test_reciprocal_of_improved_exp_is_reflection():
    e = ser_exp(ExpKind.IMPROVED, N)
    assert e.reciprocal() == e.scale_arg(-1)
    assert [c for c in e.reciprocal().coeffs] == [(-1) ** n * minus_one_pochhammer(n) / 2**n for n in range(N + 1)]


def test_reciprocal_of_one():
    one = ser_exp(ExpKind.IMPROVED, N).one()
    assert one.reciprocal() == one


def test_reciprocal_needs_unit_constant():
    with pytest.raises(NonInvertibleConstantTerm):
        series([0, 1, 2]).reciprocal()


def test_scale_arg():
    e = ser_exp(ExpKind.IMPROVED, N)
    assert e.scale_arg(1) == e
    assert e.scale_arg(Fraction(1, 3)).coeffs == tuple(improved_weight(n) / 3**n for n in range(N + 1))
    assert e.scale_arg(0).coeffs == (ONE,) + (ZERO,) * N


def test_divide_by_t():
    t = series([0, 1, 0, 0])
    assert t.divide_by_t() == series([1, 0, 0])
    d = (ser_exp(ExpKind.IMPROVED, N) - 1).divide_by_t()
    assert d.coeff(0) == ONE
    assert d.coeff(1) == Fraction(1, 2)
    with pytest.raises(NonzeroConstantTerm):
        series([1, 1]).divide_by_t()


def test_divide_then_multiply_by_t_round_trips():
    e = ser_exp(ExpKind.IMPROVED, N) - 1
    assert e.divide_by_t().multiply_by_t() == e


def test_linear_ops():
    a = ser_exp(ExpKind.IMPROVED, N)
    assert (a + (-1) * a) == a.scalar_mul(0)
    assert a.coeff(2) == rf_make([1, 1], [2])
    assert all(c2 == 2 * c for c, c2 in zip(a.coeffs, a.scalar_mul(2).coeffs))


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        series([1, 2]) * series([1, 2, 3])


def test_multiplication_is_gaussian_convolution():
    # t * t = [2]_q t^2 / [2]_q!  i.e. coefficient [2 1]_q = 1 + q
    t = series([0, 1, 0])
    assert (t * t).coeff(2) == q_int(2)


@given(st.lists(rational_functions(), min_size=4, max_size=4), st.lists(rational_functions(), min_size=4, max_size=4))
def test_mul_commutes(a, b):
    assert DividedPowerSeries(a) * DividedPowerSeries(b) == DividedPowerSeries(b) * DividedPowerSeries(a)


@given(rational_functions(nonzero=True), st.lists(rational_functions(), min_size=3, max_size=3))
def test_reciprocal_is_inverse(c0, rest):
    a = DividedPowerSeries([c0, *rest])
    assert a * a.reciprocal() == a.one()
