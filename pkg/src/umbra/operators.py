"""Linear operators on polynomials.

Shift-invariant operators are stored as an indicator series ``f`` with
``op = f(D)``, where ``D`` is the generalized derivative of a factorial
system.  An indicator may carry a *recipe*, a callable ``order -> series``
that rebuilds it to any requested order; without one, applying the operator
to a polynomial of too high a degree raises :class:`InsufficientOrder`.

Everything else is an :class:`ExplicitAction`, a plain function on
polynomials that the caller promises is linear.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Mapping

from .errors import (
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
from .factorial import CLASSICAL, FactorialSystem
from .poly import Poly, falling_factorial
from .series import DEFAULT_ORDER, TruncSeries

Recipe = Callable[[int], TruncSeries]


class Operator:
    """Common base; use :func:`apply_operator` or call the operator directly."""

    name: str

    def __call__(self, p: Poly) -> Poly:
        return self.apply(p)

    def apply(self, p: Poly) -> Poly:
        raise NotImplementedError


class ShiftInvariant(Operator):
    def __init__(self, indicator: TruncSeries, fs: FactorialSystem = CLASSICAL,
                 recipe: Recipe | None = None, name: str | None = None,
                 expr: str | None = None):
        self.fs = fs
        self.recipe = recipe
        self.name = name or "<series>"
        # expression text naming the indicator, e.g. "exp(d) - 1"
        self.expr = expr or self.name
        self._indicator = indicator
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"ShiftInvariant({self.name!r}, fs={self.fs.name!r})"

    @property
    def indicator(self) -> TruncSeries:
        return self._indicator

    def indicator_at(self, order: int) -> TruncSeries:
        """Indicator known to at least ``order`` terms, extended via the recipe."""
        order = max(order, 1)
        best = self._indicator
        if best.order >= order:
            return best
        if self.recipe is None:
            raise InsufficientOrder(
                f"indicator of {self.name} is known to order {best.order}, "
                f"need {order}, and there is no recipe to extend it")
        ext = self.recipe(order)
        if ext.order < order:
            raise InsufficientOrder(
                f"recipe for {self.name} produced order {ext.order}, need {order}")
        with self._lock:
            if ext.order > self._indicator.order:
                self._indicator = ext
        return ext

    def apply(self, p: Poly) -> Poly:
        if p.is_zero():
            return p
        n = p.degree
        c = self.indicator_at(n + 1).coeffs
        fs = self.fs
        out = [Fraction(0)] * (n + 1)
        for j, pj in enumerate(p.coeffs):
            if pj == 0:
                continue
            for k in range(j + 1):
                if c[k]:
                    out[j - k] += c[k] * pj * fs.falling(j, k)
        return Poly(out)

    # -- algebra -------------------------------------------------------

    def _derived(self, fn, others: tuple[ShiftInvariant, ...], name: str,
                 expr: str) -> ShiftInvariant:
        ops = (self,) + others

        def recipe(m: int) -> TruncSeries:
            return fn(*(op.indicator_at(m) for op in ops))

        ind = fn(*(op.indicator for op in ops))
        return ShiftInvariant(ind, self.fs, recipe, name, expr)

    def _check_fs(self, other: ShiftInvariant) -> None:
        if self.fs != other.fs:
            raise MixedFactorialSystems(
                f"{self.fs.name} vs {other.fs.name}")

    def __add__(self, other) -> ShiftInvariant:
        if isinstance(other, (int, Fraction)):
            other = identity(self.fs) * other
        if not isinstance(other, ShiftInvariant):
            return NotImplemented
        self._check_fs(other)
        return self._derived(lambda a, b: a + b, (other,),
                             f"({self.name} + {other.name})",
                             f"({self.expr}) + ({other.expr})")

    __radd__ = __add__

    def __neg__(self) -> ShiftInvariant:
        return self * -1

    def __sub__(self, other) -> ShiftInvariant:
        return self + (-other)

    def __mul__(self, other) -> ShiftInvariant:
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return self._derived(lambda a: a * c, (), f"{c}*{self.name}",
                                 f"{c}*({self.expr})")
        if not isinstance(other, ShiftInvariant):
            return NotImplemented
        self._check_fs(other)
        return self._derived(lambda a, b: a * b, (other,),
                             f"{self.name}*{other.name}",
                             f"({self.expr})*({other.expr})")

    __rmul__ = __mul__

    def inverse(self) -> ShiftInvariant:
        if self.indicator_at(1).coeffs[0] == 0:
            raise NotInvertible(f"{self.name} has zero constant term")
        return self._derived(lambda a: a.reciprocal(), (),
                             f"{self.name}^-1", f"1/({self.expr})")

    def power(self, lam) -> ShiftInvariant:
        lam = Fraction(lam)
        c0 = self.indicator_at(1).coeffs[0]
        if lam.denominator != 1 and c0 != 1:
            raise FractionalPowerNeedsUnitConstant(
                f"{self.name}^{lam} needs indicator constant term 1, got {c0}")
        if lam < 0 and c0 == 0:
            raise NotInvertible(f"{self.name} has zero constant term")
        return self._derived(lambda a: a.power(lam), (),
                             f"{self.name}^({lam})", f"({self.expr})^({lam})")

    def __pow__(self, lam) -> ShiftInvariant:
        return self.power(lam)


class ExplicitAction(Operator):
    """Operator given by its action; linearity is the caller's promise."""

    def __init__(self, action: Callable[[Poly], Poly], name: str = "<action>"):
        self.action = action
        self.name = name

    def __repr__(self) -> str:
        return f"ExplicitAction({self.name!r})"

    def apply(self, p: Poly) -> Poly:
        return self.action(p)


# -- constructors ----------------------------------------------------------

def make_shift_invariant(indicator: TruncSeries, fs: FactorialSystem = CLASSICAL,
                         recipe: Recipe | None = None, name: str | None = None,
                         expr: str | None = None) -> ShiftInvariant:
    return ShiftInvariant(indicator, fs, recipe, name, expr)


def make_explicit(action: Callable[[Poly], Poly], name: str = "<action>") -> ExplicitAction:
    return ExplicitAction(action, name)


def from_coefficients(coef: Callable[[int], object], name: str, expr: str | None = None,
                      fs: FactorialSystem = CLASSICAL,
                      order: int = DEFAULT_ORDER) -> ShiftInvariant:
    """Shift-invariant operator from a coefficient generator ``k -> c_k``."""
    def recipe(m: int) -> TruncSeries:
        return TruncSeries.from_function(coef, m)

    return ShiftInvariant(recipe(order), fs, recipe, name, expr)


def identity(fs: FactorialSystem = CLASSICAL) -> ShiftInvariant:
    return from_coefficients(lambda k: 1 if k == 0 else 0, "identity", "1", fs)


def _integral0(p: Poly) -> Poly:
    return p.integral()


def _bernoulli_int(p: Poly) -> Poly:
    big = p.integral()
    return big.shift(1) - big


def _fmt(a: Fraction) -> str:
    return str(a) if a.denominator == 1 and a >= 0 else f"({a})"


def _catalog_entries():
    inv = lambda k: Fraction(1, factorial(k))  # noqa: E731
    return {
        "d": (lambda p: (lambda k: 1 if k == 1 else 0, "d")),
        "delta": (lambda p: (lambda k: inv(k) if k else 0, "exp(d) - 1")),
        "nabla": (lambda p: (lambda k: -inv(k) * (-1) ** k if k else 0, "1 - exp(-d)")),
        "bernoulli": (lambda p: (lambda k: inv(k + 1), "(exp(d) - 1)/d")),
        "identity": (lambda p: (lambda k: 1 if k == 0 else 0, "1")),
        "shift": (lambda p: (lambda k: p["a"] ** k * inv(k), f"exp({_fmt(p['a'])}*d)")),
        "abel": (lambda p: (lambda k: p["a"] ** (k - 1) * inv(k - 1) if k else 0,
                            f"d*exp({_fmt(p['a'])}*d)")),
    }


_CATALOG = _catalog_entries()
_PARAMS = {"shift": ("a",), "abel": ("a",)}
EXPLICIT_CATALOG = {"integral0": _integral0, "bernoulliInt": _bernoulli_int}
CATALOG_NAMES = tuple(_CATALOG) + tuple(EXPLICIT_CATALOG)

CATALOG_HELP = {
    "d": "derivative, indicator t",
    "delta": "forward difference p(x+1) - p(x), indicator e^t - 1",
    "nabla": "backward difference p(x) - p(x-1), indicator 1 - e^-t",
    "shift": "shift(a): p(x) -> p(x+a), indicator e^(a t)",
    "bernoulli": "Bernoulli averaging, indicator (e^t - 1)/t",
    "abel": "abel(a): Abel operator d E^a, indicator t e^(a t)",
    "identity": "identity, indicator 1",
    "integral0": "explicit: p -> integral of p from 0 to x",
    "bernoulliInt": "explicit: p -> integral of p from x to x+1",
}


def catalog_operator(name: str, params: Mapping[str, object] | None = None,
                     fs: FactorialSystem = CLASSICAL,
                     order: int = DEFAULT_ORDER) -> Operator:
    params = dict(params or {})
    if name in EXPLICIT_CATALOG:
        return ExplicitAction(EXPLICIT_CATALOG[name], name)
    if name not in _CATALOG:
        raise UnknownOperator(f"unknown operator {name!r}")
    for key in _PARAMS.get(name, ()):
        if key not in params:
            raise MissingParam(f"operator {name!r} needs parameter {key!r}")
        params[key] = Fraction(params[key])
    coef, expr = _CATALOG[name](params)
    label = name
    if name in _PARAMS:
        label = f"{name}({', '.join(str(params[k]) for k in _PARAMS[name])})"
    return from_coefficients(coef, label, expr, fs, order)


def apply_operator(op: Operator, p: Poly) -> Poly:
    return op.apply(p)


def operator_algebra(a: ShiftInvariant, b: ShiftInvariant | None, kind: str,
                     lam=None) -> ShiftInvariant:
    """Combine shift-invariant operators: add, mul, inverse or power."""
    for op in (a, b):
        if op is not None and not isinstance(op, ShiftInvariant):
            raise NotShiftInvariant(f"{op.name} is not shift-invariant")
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "inverse":
        return a.inverse()
    if kind == "power":
        return a.power(lam)
    raise ValueError(f"unknown kind {kind!r}")


def classify(op: Operator) -> str:
    """Return ``"delta"``, ``"invertible"`` or ``"neither"``."""
    if not isinstance(op, ShiftInvariant):
        raise NotShiftInvariant(f"cannot classify explicit action {op.name}")
    ind = op.indicator_at(2)
    if ind.coeffs[0] != 0:
        return "invertible"
    if ind.coeffs[1] != 0:
        return "delta"
    return "neither"


def require_delta(q: Operator) -> ShiftInvariant:
    if not isinstance(q, ShiftInvariant) or classify(q) != "delta":
        raise NotDelta(f"{q.name} is not a delta operator")
    return q


def operators_agree(a: Operator, b: Operator, degree: int) -> bool:
    """Test-equality: same action on ``x**0 .. x**degree``."""
    return all(a(Poly.monomial(n)) == b(Poly.monomial(n)) for n in range(degree + 1))


# -- expansion theorems -----------------------------------------------------

@dataclass(frozen=True)
class OperatorExpansionResult:
    """``sum(coeffs[k] * base**k)`` through ``base**(order-1)``."""

    base: ShiftInvariant
    coeffs: tuple[Fraction, ...]
    order: int

    def apply(self, p: Poly) -> Poly:
        out = Poly()
        term = p
        for c in self.coeffs:
            if term.is_zero():
                break
            out = out + term * c
            term = self.base(term)
        return out


@dataclass(frozen=True)
class KMExpansionResult:
    """``T = sum(coeffs[k](x) * d**k)`` on polynomials of degree < order."""

    coeffs: tuple[Poly, ...]
    order: int

    def apply(self, p: Poly) -> Poly:
        out = Poly()
        term = p
        for b in self.coeffs:
            if term.is_zero():
                break
            out = out + b * term
            term = term.derivative()
        return out


def operator_expansion(t: Operator, q: Operator, order: int) -> OperatorExpansionResult:
    """Expand shift-invariant ``t`` as a power series in the delta operator ``q``.

    ``c_k = (t p_k)(0) / [k]!`` with ``p_k`` the basic sequence of ``q``.
    """
    from .sequences import basic_sequence

    if not isinstance(t, ShiftInvariant):
        raise NotShiftInvariant(f"{t.name} is not shift-invariant")
    q = require_delta(q)
    if t.fs != q.fs:
        raise MixedFactorialSystems(f"{t.fs.name} vs {q.fs.name}")
    if order < 1:
        raise ValueError("expansion order must be positive")
    fs = q.fs
    basis = basic_sequence(q, order - 1, fs)
    coeffs = tuple(t(p)(0) / fs.factorial(k) for k, p in enumerate(basis))
    return OperatorExpansionResult(q, coeffs, order)


def km_expansion(t: Operator, order: int) -> KMExpansionResult:
    """Write ``t`` as ``sum_k b_k(x) d**k`` with polynomial coefficients.

    Triangular recurrence on monomials:
    ``b_n = (t x^n - sum_{k<n} b_k (n)_k x^(n-k)) / n!``.
    """
    if isinstance(t, ShiftInvariant) and not t.fs.is_classical:
        raise NonClassicalFactorial("KM expansion is defined for the classical derivative only")
    bs: list[Poly] = []
    for n in range(order):
        acc = t(Poly.monomial(n))
        for k, b in enumerate(bs):
            acc = acc - b * Poly.monomial(n - k, falling_factorial(k)(n))
        bs.append(acc / factorial(n))
    return KMExpansionResult(tuple(bs), order)
