from fractions import Fraction

import pytest

from qbernoulli.identities import (
    CHECKS,
    CheckResult,
    ConfigInvalid,
    SuiteConfig,
    SuiteReport,
    build_grid,
    numeric_check,
    run_check,
    run_suite,
)
from qbernoulli.qpoly import QPoly, X, Y
from qbernoulli.qpolynomials import QFamilies

FAMILIES = ["bernoulli", "euler", "genocchi"]


@pytest.mark.parametrize("family", FAMILIES)
def test_number_checks_pass(family):
    for name in ("number_recurrence", "dual_path", "parity", "classical_limit_numbers"):
        assert run_check(name, family=family, max_n=16).passed, name


def test_fault_in_bernoulli_two_shows_up_at_level_three():
    fam = QFamilies().with_fault("bernoulli", 2, 1)
    r = run_check("number_recurrence", fam, family="bernoulli", max_n=24)
    assert r.status == "fail" and r.discrepancy
    assert "part 2" in r.detail  # residual levels start at 1, so part 2 is level 3


@pytest.mark.parametrize(
    "name,params",
    [
        ("addition", {"family": "bernoulli", "n": 1}),
        ("addition", {"family": "euler", "n": 0}),
        ("difference", {"family": "bernoulli", "n": 1}),
        ("difference", {"family": "euler", "n": 0}),
        ("difference", {"family": "genocchi", "n": 2}),
        ("derivative", {"family": "bernoulli", "n": 2}),
        ("derivative", {"family": "euler", "n": 1}),
        ("derivative", {"family": "genocchi", "n": 1}),
        ("inversion", {"family": "bernoulli", "n": 1}),
        ("inversion", {"family": "euler", "n": 0}),
        ("convolution", {"family": "bernoulli", "n": 1}),
        ("convolution", {"family": "euler", "n": 0}),
        ("convolution", {"family": "genocchi", "n": 2}),
        ("tangent_genocchi", {"max_odd": 3}),
        ("sp1", {"n": 1, "m": 1}),
        ("sp1", {"n": 0, "m": 3}),
        ("cheon", {"n": 0}),
        ("cheon", {"n": 1}),
        ("sp2", {"n": 0, "m": 2}),
        ("sp3", {"n": 1, "m": 2, "which": "first"}),
        ("sp3", {"n": 0, "m": 2, "which": "first"}),
        ("qbinomial_formula", {"n": 2}),
        ("qbinomial_formula", {"n": 0}),
        ("exp_product", {"n": 2}),
        ("exp_product", {"n": 0}),
    ],
)
def test_documented_examples_pass(name, params):
    r = run_check(name, **params)
    assert r.passed, (name, params, str(r.discrepancy))


@pytest.mark.parametrize("n", range(0, 11))
def test_cheon_up_to_ten(n):
    assert run_check("cheon", n=n).passed


@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_sp2_as_printed_n0(m):
    r = run_check("sp2_as_printed", n=0, m=m)
    assert r.status == "fail" and not r.gating
    d = r.discrepancy
    assert d.coeff(0, 0) == 1 - Fraction(1, m)
    assert d.subs_y(0).coeff(0, 0) == 1 - Fraction(1, m)
    # off the diagonal the printed display also picks up y - x
    assert d == QPoly.constant(1 - Fraction(1, m)) - X + Y
    assert d.eval(Fraction(3, 7), Fraction(3, 7)) == 1 - Fraction(1, m)


def test_inversion_as_printed_is_off_by_q_integer_ratio():
    r = run_check("inversion_as_printed", family="bernoulli", n=2)
    assert r.status == "fail" and not r.gating


def test_ominus_display_as_printed_differs_from_definition():
    assert run_check("ominus_display_as_printed", n=1).passed
    assert not run_check("ominus_display_as_printed", n=2).passed


def test_discrepancy_is_symbolic():
    fam = QFamilies().with_fault("euler", 3, Fraction(1, 5))
    r = run_check("addition", fam, family="euler", n=4)
    assert r.passed  # both constructions read the same perturbed table
    r = run_check("classical_limit_poly", fam, family="euler", n=4)
    assert not r.passed and isinstance(r.discrepancy, QPoly)


def test_check_result_json_round_trip():
    fam = QFamilies().with_fault("genocchi", 2, 1)
    for r in (run_check("sp3", n=2, m=2, which="second"), run_check("difference", fam, family="genocchi", n=3)):
        back = CheckResult.from_json(r.to_json())
        assert back.to_json() == r.to_json()


def test_small_suite_report_round_trip():
    cfg = SuiteConfig(max_n=3, sp_max_n=2, numbers_max_n=8, limit_numbers_max_n=6, limit_poly_max_n=3, tangent_max_odd=5)
    rep = run_suite(cfg)
    assert rep.ok
    back = SuiteReport.from_json(rep.to_json())
    assert back.data() == rep.data()


def test_grid_is_deterministic():
    assert build_grid(SuiteConfig()) == build_grid(SuiteConfig())


@pytest.mark.parametrize(
    "kwargs",
    [{"max_n": -1}, {"m_values": ()}, {"m_values": (0, 2)}, {"tangent_max_odd": 0}, {"fault": ("euler", -1, 1)}, {"fault": ("euler", 1, 0)}],
)
def test_invalid_configs(kwargs):
    with pytest.raises(ConfigInvalid):
        run_suite(SuiteConfig(**kwargs))


@pytest.mark.parametrize(
    "name,params",
    [
        ("addition", {"family": "genocchi", "n": 5}),
        ("difference", {"family": "bernoulli", "n": 6}),
        ("derivative", {"family": "euler", "n": 5}),
        ("convolution", {"family": "bernoulli", "n": 4}),
        ("sp1", {"n": 4, "m": 3}),
        ("sp3", {"n": 4, "m": 2, "which": "second"}),
        ("cheon", {"n": 5}),
    ],
)
def test_classical_shadow(name, params):
    # composing each side with q -> 1 gives equal classical polynomials
    parts = CHECKS[name].fn(QFamilies(), **params)
    for lhs, rhs in parts if isinstance(parts, list) else [parts]:
        assert lhs.limit_q1() == rhs.limit_q1()


@pytest.mark.parametrize("q0", [-1, 1])
def test_numeric_check_at_roots_of_q_integers(q0):
    # [n]_q vanishes at q = -1 for even n; reduced forms keep these points regular
    for s in numeric_check("sp1", q0, Fraction(1, 2), Fraction(-2, 3), n=4, m=2):
        assert s.consistent and s.lhs == s.rhs


def test_numeric_check_consistency():
    for s in numeric_check("sp2_as_printed", Fraction(1, 3), Fraction(2, 5), Fraction(-1, 7), n=0, m=2):
        assert s.consistent and s.discrepancy == Fraction(-3, 70)
