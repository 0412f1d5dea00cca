from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from qbernoulli.qcombinatorics import (
    curly_binomial,
    minus_one_pochhammer,
    oplus_expand,
    ominus_expand,
    pochhammer,
    q_binomial,
    q_factorial,
    q_int,
)
from qbernoulli.qfield import ONE, Q, ZERO, rf_make

half_one_plus_q = rf_make([1, 1], [2])


def test_q_int_examples():
    assert q_int(0) == ZERO
    assert q_int(3) == rf_make([1, 1, 1])
    assert q_int(-1) == rf_make([-1], [0, 1])


def test_q_factorial_examples():
    assert q_factorial(0) == ONE
    assert q_factorial(3) == rf_make([1, 1]) * rf_make([1, 1, 1])
    assert q_factorial(4).limit_q1() == 24


def test_q_binomial_examples():
    assert all(q_binomial(n, 0) == ONE for n in range(8))
    assert q_binomial(4, 2) == rf_make([1, 1, 2, 1, 1])
    assert q_binomial(3, 5) == ZERO


def test_pochhammer_examples():
    assert pochhammer(Q, 0) == ONE
    assert pochhammer(-1, 3) == rf_make([2]) * rf_make([1, 1]) * rf_make([1, 0, 1])
    assert pochhammer(Q, 2) == (1 - Q) * (1 - Q**2)
    assert minus_one_pochhammer(3) == pochhammer(-1, 3)


def test_curly_binomial_examples():
    assert all(curly_binomial(n, n) == ONE for n in range(6))
    assert curly_binomial(2, 1) == rf_make([1, 1])
    assert curly_binomial(2, 0) == half_one_plus_q


def test_oplus_examples():
    assert oplus_expand(0).coeffs == (ONE,)
    assert oplus_expand(1).coeffs == (ONE, ONE)
    assert oplus_expand(2).coeffs == (half_one_plus_q, rf_make([1, 1]), half_one_plus_q)


def test_ominus_examples():
    assert ominus_expand(1).coeffs == (-ONE, ONE)
    assert ominus_expand(2)[1] == -rf_make([1, 1])


@pytest.mark.parametrize("n", range(1, 7))
def test_ominus_on_diagonal_vanishes_at_q1(n):
    # (x (-) x)^n at q -> 1 is (x - x)^n = 0
    assert sum(c.limit_q1() for c in ominus_expand(n).coeffs) == 0


@given(st.integers(min_value=1, max_value=14), st.integers(min_value=1, max_value=14))
def test_q_pascal(n, k):
    assert q_binomial(n, k) == q_binomial(n - 1, k - 1) + Q**k * q_binomial(n - 1, k)


@given(st.integers(min_value=0, max_value=14), st.integers(min_value=0, max_value=14))
def test_q_binomial_symmetric_and_classical(n, k):
    if k > n:
        assert q_binomial(n, k) == ZERO
        return
    assert q_binomial(n, k) == q_binomial(n, n - k)
    assert q_binomial(n, k).limit_q1() == comb(n, k)
    assert q_binomial(n, k) == q_factorial(n) / (q_factorial(k) * q_factorial(n - k))


@given(st.integers(min_value=0, max_value=10))
def test_q_factorial_classical(n):
    assert q_factorial(n).limit_q1() == factorial(n)


@given(st.integers(min_value=0, max_value=10))
def test_oplus_at_q1_is_binomial(n):
    assert [c.limit_q1() for c in oplus_expand(n).coeffs] == [comb(n, k) for k in range(n + 1)]


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        q_factorial(-1)
