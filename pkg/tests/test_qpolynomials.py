from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qbernoulli.qcombinatorics import q_int
from qbernoulli.qfield import ONE, Q, rf_make
from qbernoulli.qnumbers import NumberFamily
from qbernoulli.qpoly import QPoly, X, Y
from qbernoulli.qpolynomials import (
    Construction,
    classical_poly,
    family_poly_bivariate,
    family_poly_univariate,
    monomial_expansion,
    poly_eval,
    poly_limit_q1,
    poly_scale_x,
    q_derivative,
)

from conftest import rationals

FAMILIES = ["bernoulli", "euler", "genocchi"]
h = rf_make([1, 1], [2])


def test_univariate_examples():
    assert family_poly_univariate("bernoulli", 1) == X - Fraction(1, 2)
    b2 = family_poly_univariate("bernoulli", 2)
    assert b2 == X**2 * h - X * h + rf_make([0, 1, 1], [4, 4, 4])
    assert QPoly(b2.limit_q1()) == X**2 - X + Fraction(1, 6)
    assert family_poly_univariate("genocchi", 2) == X * rf_make([1, 1]) - h


def test_bivariate_examples():
    assert family_poly_bivariate("bernoulli", 1) == X + Y - Fraction(1, 2)
    assert family_poly_bivariate("euler", 0) == ONE


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("n", range(0, 8))
def test_constructions_agree(family, n):
    a = family_poly_bivariate(family, n, Construction.Q_ADDITION)
    assert a == family_poly_bivariate(family, n, Construction.UNIVARIATE_PLUS_Y)
    assert a == family_poly_bivariate(family, n, Construction.SERIES)


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("n", range(0, 8))
def test_y_zero_gives_univariate(family, n):
    assert family_poly_bivariate(family, n).subs_y(0) == family_poly_univariate(family, n)


def test_jackson_derivative():
    assert q_derivative(X**3) == X**2 * q_int(3)
    assert q_derivative(QPoly.constant(5)) == QPoly()
    b1 = family_poly_univariate("bernoulli", 1)
    rhs = (b1 + poly_scale_x(b1, Q)) * (q_int(2) * Fraction(1, 2))
    assert q_derivative(family_poly_univariate("bernoulli", 2)) == rhs


def test_scale_and_eval():
    b1 = family_poly_univariate("bernoulli", 1)
    assert poly_scale_x(b1, Q) == X * Q - Fraction(1, 2)
    assert poly_scale_x(b1, 1) == b1
    assert family_poly_bivariate("bernoulli", 1).subs_y(Fraction(1, 2)) == X
    assert poly_eval(family_poly_bivariate("bernoulli", 1), Fraction(1, 2), 0) == 0


def test_limits():
    assert poly_limit_q1(family_poly_univariate("bernoulli", 2)) == {(2, 0): 1, (1, 0): -1, (0, 0): Fraction(1, 6)}
    assert poly_limit_q1(family_poly_univariate("euler", 1)) == {(1, 0): 1, (0, 0): Fraction(-1, 2)}


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("n", range(0, 9))
def test_bivariate_limit_is_classical(family, n):
    assert poly_limit_q1(family_poly_bivariate(family, n)) == classical_poly(family, n, bivariate=True)


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("n", range(0, 9))
def test_monomial_expansion(family, n):
    assert monomial_expansion(family, n) == X**n


def test_monomial_expansion_small_cases():
    assert monomial_expansion("bernoulli", 1) == X
    assert monomial_expansion("euler", 0) == ONE
    # genocchi n = 1 at q = 1: x = (G_2(x+1) + G_2(x)) / 4
    assert QPoly(monomial_expansion("genocchi", 1).limit_q1()) == X


def test_tangent_has_no_polynomials():
    with pytest.raises(ValueError):
        family_poly_univariate(NumberFamily.TANGENT, 2)


def test_negative_degree_rejected():
    with pytest.raises(ValueError):
        family_poly_bivariate("euler", -1)


@given(st.sampled_from(FAMILIES), st.integers(min_value=0, max_value=6), rationals, rationals)
def test_symmetry_numeric(family, n, x0, y0):
    p = family_poly_bivariate(family, n)
    assert p.eval(x0, y0) == p.eval(y0, x0)


def test_qpoly_json_round_trip():
    p = family_poly_bivariate("genocchi", 5)
    assert QPoly.from_json(p.to_json()) == p
