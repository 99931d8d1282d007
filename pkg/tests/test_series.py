from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, strategies as st

from umbra import TruncSeries, series_arith, series_exp_log
from umbra.errors import (
    ConstantTermNotOne,
    DivisionByHigherValuation,
    NonzeroConstantTerm,
    NotReversible,
)

from conftest import nonzero_fractions, small_fractions


def S(*coeffs, order=None):
    return TruncSeries([F(c) for c in coeffs], order)


def exp_minus_one(order):
    return TruncSeries([0] + [F(1, factorial(k)) for k in range(1, order)], order)


def test_bernoulli_indicator_division():
    # (e^t - 1)/t: shift the coefficient list down by one by hand
    q = series_arith(exp_minus_one(4), S(0, 1, 0, 0), "div")
    assert q == S(1, "1/2", "1/6")
    assert q.order == 3


def test_div_identities():
    f = S(1, 2, 3, 4)
    assert f * S(1, 0, 0, 0) == f
    assert series_arith(S(1, 1, 0, 0), S(1, 1, 0, 0), "div") == S(1, 0, 0, 0)


def test_div_precondition():
    with pytest.raises(DivisionByHigherValuation):
        S(1, 1, 0) / S(0, 1, 0)
    with pytest.raises(DivisionByHigherValuation):
        S(0, 0, 1) / S(0, 0, 0)


def test_compose():
    f = S(1, 1, 1, 0, 0, 0)
    assert f.compose(S(0, 0, 1, 0, 0, 0)) == S(1, 0, 1, 0, 1, 0)
    g = S(3, -1, "1/2", 7)
    assert g.compose(S(0, 1, 0, 0)) == g
    log1p = TruncSeries.log1p_series(6)
    assert TruncSeries.exp_series(6).compose(log1p) == S(1, 1, 0, 0, 0, 0)
    with pytest.raises(NonzeroConstantTerm):
        f.compose(S(1, 1, 0))


def test_revert_examples():
    assert S(0, 1, 0, 0).revert() == S(0, 1, 0, 0)
    assert exp_minus_one(4).revert() == S(0, 1, "-1/2", "1/3")
    # signed Catalan numbers
    assert S(0, 1, 1, 0, 0).revert() == S(0, 1, -1, 2, -5)
    for bad in (S(1, 1, 0), S(0, 0, 1), S(0)):
        with pytest.raises(NotReversible):
            bad.revert()


def test_revert_matches_log1p():
    # inverse of e^t - 1 is log(1+t), whose coefficients are (-1)^(k+1)/k
    g = exp_minus_one(12).revert()
    assert list(g) == [0] + [F((-1) ** (k + 1), k) for k in range(1, 12)]


def test_exp_log_examples():
    assert series_exp_log(S(0, 1, 0, 0, 0), "exp") == S(1, 1, "1/2", "1/6", "1/24")
    assert series_exp_log(S(1, 1, 0, 0), "log") == S(0, 1, "-1/2", "1/3")
    assert S(1, 1, 0, 0, 0, 0).log().exp() == S(1, 1, 0, 0, 0, 0)
    with pytest.raises(NonzeroConstantTerm):
        S(1, 1).exp()
    with pytest.raises(ConstantTermNotOne):
        S(2, 1).log()


def test_rational_power():
    # (1+t)^(1/2) against the binomial series
    half = S(1, 1, 0, 0, 0, 0).power(F(1, 2))
    assert list(half) == [1, F(1, 2), F(-1, 8), F(1, 16), F(-5, 128), F(7, 256)]
    assert S(1, 1, 0, 0).power(-1) == S(1, -1, 1, -1)


@st.composite
def valuation_one(draw, order=8):
    c1 = draw(nonzero_fractions)
    rest = draw(st.lists(small_fractions, min_size=order - 2, max_size=order - 2))
    return TruncSeries([0, c1] + rest, order)


@st.composite
def unit_series(draw, order=8):
    rest = draw(st.lists(small_fractions, min_size=order - 1, max_size=order - 1))
    return TruncSeries([1] + rest, order)


@given(valuation_one())
def test_compose_revert_is_identity(f):
    g = f.revert()
    assert f.compose(g) == TruncSeries.variable(f.order)
    assert g.compose(f) == TruncSeries.variable(f.order)


@given(unit_series())
def test_log_exp_round_trip(f):
    assert f.log().exp() == f


@given(st.lists(small_fractions, min_size=8, max_size=8),
       st.integers(0, 3), nonzero_fractions,
       st.lists(small_fractions, min_size=7, max_size=7))
def test_div_then_mul(fc, v, g0, gtail):
    f = TruncSeries([0] * v + fc[v:], 8)
    g = TruncSeries([0] * v + [g0] + gtail[: 7 - v], 8)
    q = f / g
    assert q.order == 8 - v
    # (f/g)*g == f on the coefficients the quotient guarantees
    prod = q * TruncSeries(g.coeffs[v:], q.order)
    assert list(prod) == list(f.coeffs[v:])
