import pytest
from hypothesis import settings, strategies as st

from qbernoulli.qfield import RationalFunction

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-20, max_value=20)
int_polys = st.lists(small_ints, min_size=1, max_size=6)
nonzero_int_polys = int_polys.filter(lambda c: any(c))


@st.composite
def rational_functions(draw, nonzero=False):
    num = draw(nonzero_int_polys if nonzero else int_polys)
    den = draw(nonzero_int_polys)
    return RationalFunction(num, den)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)


# ---------------------------------------------------------------------------
# acceptance criterion reporting: one PASS/FAIL line per criterion

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    number, title = mark.args
    prev = _ACCEPTANCE.get(number, (title, True))
    ok = prev[1] and not rep.failed
    if rep.when == "setup" and rep.passed:
        ok = prev[1]
    _ACCEPTANCE[number] = (title, ok)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
