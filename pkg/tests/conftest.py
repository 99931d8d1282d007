from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from umbra import Poly, catalog_operator

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)
nonzero_fractions = small_fractions.filter(lambda q: q != 0)


@st.composite
def polys(draw, max_degree=8):
    coeffs = draw(st.lists(small_fractions, min_size=0, max_size=max_degree + 1))
    return Poly(coeffs)


@st.composite
def triangular_polys(draw, n):
    """Coefficient rows of a triangular sequence of length n."""
    out = []
    for k in range(n):
        low = draw(st.lists(small_fractions, min_size=k, max_size=k))
        lead = draw(nonzero_fractions)
        out.append(Poly(low + [lead]))
    return out


def X(*coeffs):
    """Poly from ascending coefficients, accepting ints and 'p/q' strings."""
    return Poly(Fraction(c) for c in coeffs)


@pytest.fixture
def op():
    def make(name, **params):
        return catalog_operator(name, params)
    return make


# -- acceptance reporting ----------------------------------------------------

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None and report.when == "call":
        number, title = mark.args
        _criteria.append((number, title, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(_criteria):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  AC{number:>2}  {title}")
