from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, strategies as st

from umbra import (
    ExplicitAction,
    Poly,
    TruncSeries,
    apply_operator,
    catalog_operator,
    classify,
    identity,
    km_expansion,
    make_explicit,
    make_factorial_system,
    make_shift_invariant,
    operator_algebra,
    operator_expansion,
    operators_agree,
)
from umbra.errors import (
    FractionalPowerNeedsUnitConstant,
    InsufficientOrder,
    MissingParam,
    MixedFactorialSystems,
    NonClassicalFactorial,
    NotDelta,
    NotInvertible,
    NotShiftInvariant,
    UnknownOperator,
)

from conftest import X, nonzero_fractions, polys, small_fractions

x3 = Poly.monomial(3)


def series(*c):
    return TruncSeries([F(v) for v in c])


def test_make_shift_invariant():
    d = make_shift_invariant(series(0, 1, 0, 0, 0))
    assert d(x3) == X(0, 0, 3)
    delta = make_shift_invariant(TruncSeries([0, 1, F(1, 2), F(1, 6), F(1, 24)]))
    assert delta(x3) == X(1, 3, 3)
    one = make_shift_invariant(series(1, 0, 0, 0, 0))
    assert one(x3) == x3


def test_make_explicit():
    shift1 = make_explicit(lambda p: p.shift(1))
    assert operators_agree(shift1, catalog_operator("shift", {"a": 1}), 4)
    bern = make_explicit(lambda p: p.integral().shift(1) - p.integral())
    assert operators_agree(bern, catalog_operator("bernoulli"), 6)
    assert make_explicit(lambda p: p)(x3) == x3


def test_catalog_examples(op):
    assert op("delta")(x3) == X(1, 3, 3)
    assert op("shift", a=1)(Poly.monomial(2)) == X(1, 2, 1)
    # integral of t^2 from x to x+1 = x^2 + x + 1/3
    assert op("bernoulliInt")(Poly.monomial(2)) == X("1/3", 1, 1)
    assert op("nabla")(x3) == X(1, -3, 3)  # x^3 - (x-1)^3
    assert op("abel", a=2)(Poly.monomial(2)) == X(4, 2)  # d of (x+2)^2
    assert op("integral0")(x3) == X(0, 0, 0, 0, "1/4")
    with pytest.raises(UnknownOperator):
        catalog_operator("sigma")
    with pytest.raises(MissingParam):
        catalog_operator("shift")


def test_apply_generalized_derivative():
    assert catalog_operator("d", fs=make_factorial_system("divided"))(x3) == Poly.monomial(2)
    assert catalog_operator("d", fs=make_factorial_system("gaussian:2"))(x3) == X(0, 0, 7)
    assert catalog_operator("d")(x3) == X(0, 0, 3)
    assert apply_operator(catalog_operator("d", fs=make_factorial_system("hyperbolic")),
                          x3) == X(0, 0, 30)


def test_insufficient_order_without_recipe():
    op = make_shift_invariant(series(0, 1, 0))
    assert op(Poly.monomial(2)) == X(0, 2)
    with pytest.raises(InsufficientOrder):
        op(x3)


def test_recipe_extends_indicator(op):
    delta = op("delta")
    big = Poly.monomial(30)
    assert delta(big) == big.shift(1) - big


def test_algebra_examples(op):
    diff = op("shift", a=1) + identity() * -1
    assert diff.indicator.agrees_with(op("delta").indicator)
    binv = operator_algebra(op("bernoulli"), None, "inverse")
    assert binv(Poly.monomial(2)) == X("1/6", -1, 1)
    half = operator_algebra(op("shift", a=1), None, "power", F(1, 2))
    assert half.indicator == op("shift", a=F(1, 2)).indicator


def test_algebra_errors(op):
    with pytest.raises(NotInvertible):
        op("delta").inverse()
    with pytest.raises(FractionalPowerNeedsUnitConstant):
        op("delta").power(F(1, 2))
    with pytest.raises(FractionalPowerNeedsUnitConstant):
        (op("identity") * 2).power(F(1, 3))
    with pytest.raises(MixedFactorialSystems):
        op("d") + catalog_operator("d", fs=make_factorial_system("divided"))
    with pytest.raises(NotShiftInvariant):
        operator_algebra(op("integral0"), op("d"), "add")
    assert op("delta").power(2).indicator.agrees_with((op("delta") * op("delta")).indicator)
    assert (op("identity") * 4).power(-2)(x3) == x3 / 16


def test_classify(op):
    assert classify(op("delta")) == "delta"
    assert classify(op("shift", a=1)) == "invertible"
    assert classify(make_shift_invariant(series(0, 0, 1))) == "neither"
    with pytest.raises(NotShiftInvariant):
        classify(op("integral0"))


def test_operator_expansion_examples(op):
    assert operator_expansion(op("d"), op("delta"), 3).coeffs == (0, 1, F(-1, 2))
    t = op("abel", a=F(1, 3))
    assert operator_expansion(t, op("d"), 8).coeffs == tuple(t.indicator_at(8))[:8]
    with pytest.raises(NotDelta):
        operator_expansion(op("d"), make_shift_invariant(series(0, 0, 1)), 3)
    with pytest.raises(MixedFactorialSystems):
        operator_expansion(op("d"),
                           catalog_operator("delta", fs=make_factorial_system("divided")), 3)


def _gregory_oracle(m):
    # x / log(1+x) by plain long division of coefficient lists
    log_over_x = [F((-1) ** k, k + 1) for k in range(m)]
    out = []
    for k in range(m):
        s = (1 if k == 0 else 0) - sum(out[j] * log_over_x[k - j] for j in range(k))
        out.append(s / log_over_x[0])
    return out


def test_newton_cotes_coefficients(op):
    res = operator_expansion(op("bernoulli"), op("delta"), 6)
    expected = [F(1), F(1, 2), F(-1, 12), F(1, 24), F(-19, 720), F(3, 160)]
    assert list(res.coeffs) == expected == _gregory_oracle(6)
    for n in range(6):
        p = Poly.monomial(n)
        assert res.apply(p) == op("bernoulliInt")(p)


def test_km_examples(op):
    res = km_expansion(op("integral0"), 5)
    assert res.coeffs == tuple(
        Poly.monomial(k + 1, F((-1) ** k, factorial(k + 1))) for k in range(5))
    d = km_expansion(op("d"), 6)
    assert d.coeffs == (Poly(), Poly([1])) + (Poly(),) * 4
    mul_x = km_expansion(ExplicitAction(lambda p: p * Poly.x()), 6)
    assert mul_x.coeffs == (Poly.x(),) + (Poly(),) * 5
    with pytest.raises(NonClassicalFactorial):
        km_expansion(catalog_operator("d", fs=make_factorial_system("divided")), 3)


@pytest.mark.parametrize("name", ["integral0", "bernoulliInt"])
def test_km_reconstruction(name):
    t = catalog_operator(name)
    res = km_expansion(t, 9)
    for n in range(9):
        p = Poly.monomial(n)
        assert res.apply(p) == t(p)


# -- properties ---------------------------------------------------------------

@st.composite
def indicators(draw, delta=False, order=10):
    tail = draw(st.lists(small_fractions, min_size=order - 2, max_size=order - 2))
    if delta:
        head = [0, draw(nonzero_fractions)]
    else:
        head = draw(st.lists(small_fractions, min_size=2, max_size=2))
    return make_shift_invariant(TruncSeries(head + tail, order))


@given(indicators(), indicators(delta=True), st.integers(1, 10))
def test_expansion_reconstruction(t, q, m):
    res = operator_expansion(t, q, m)
    for j in range(m):
        p = Poly.monomial(j)
        assert res.apply(p) == t(p)


@given(indicators(), indicators(), polys(8))
def test_shift_invariant_operators_commute(a, b, p):
    assert a(b(p)) == b(a(p))


@given(indicators(), polys(8), small_fractions)
def test_shift_invariance_witness(op, p, a):
    assert op(p.shift(a)) == op(p).shift(a)


@given(indicators())
def test_classify_delta_iff_constant_on_x(op):
    image = op(Poly.x())
    is_nonzero_constant = image.degree == 0
    assert (classify(op) == "delta") == is_nonzero_constant


@pytest.mark.parametrize("lam", [1, 2, F(1, 2), -3])
@given(tail=st.lists(small_fractions, min_size=9, max_size=9))
def test_power_inverse_consistency(lam, tail):
    s = make_shift_invariant(TruncSeries([1] + tail, 10))
    prod = s.power(lam) * s.power(-lam)
    assert prod.indicator == TruncSeries([1], 10)


@pytest.mark.parametrize("name", ["integral0", "bernoulliInt"])
@given(p=polys(6), q=polys(6), c=small_fractions)
def test_explicit_actions_are_linear(name, p, q, c):
    t = catalog_operator(name)
    assert t(p + q) == t(p) + t(q)
    assert t(p * c) == t(p) * c
