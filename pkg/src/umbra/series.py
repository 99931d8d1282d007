"""Truncated formal power series with exact rational coefficients.

A :class:`TruncSeries` of order ``N`` is known modulo ``t**N``: it stores
exactly ``N`` coefficients and every operation reports the order to which its
result is actually determined.  Nothing is padded with guessed terms.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Iterable

from .errors import (
    ConstantTermNotOne,
    DivisionByHigherValuation,
    NonzeroConstantTerm,
    NotInvertible,
    NotReversible,
)

DEFAULT_ORDER = 16


class TruncSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs)
        if order < 1:
            raise ValueError("series order must be positive")
        cs = cs[:order] + [Fraction(0)] * (order - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def from_function(cls, f: Callable[[int], object], order: int) -> TruncSeries:
        """Build from a coefficient generator ``k -> c_k``."""
        return cls([f(k) for k in range(order)], order)

    @classmethod
    def constant(cls, c, order: int = DEFAULT_ORDER) -> TruncSeries:
        return cls([c], order)

    @classmethod
    def variable(cls, order: int = DEFAULT_ORDER) -> TruncSeries:
        return cls([0, 1], order)

    @classmethod
    def exp_series(cls, order: int = DEFAULT_ORDER) -> TruncSeries:
        return cls.from_function(lambda k: Fraction(1, factorial(k)), order)

    @classmethod
    def log1p_series(cls, order: int = DEFAULT_ORDER) -> TruncSeries:
        return cls.from_function(
            lambda k: Fraction((-1) ** (k + 1), k) if k else 0, order)

    def __getitem__(self, k: int) -> Fraction:
        if k >= self.order:
            raise IndexError(f"coefficient t^{k} unknown at order {self.order}")
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __repr__(self) -> str:
        from .printing import format_series
        return f"TruncSeries({format_series(self)!r})"

    @property
    def valuation(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return self.order

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise ValueError("cannot raise the order of a truncated series")
        return TruncSeries(self.coeffs[:order], order)

    def agrees_with(self, other: TruncSeries) -> bool:
        """Equal on the coefficients both series know."""
        n = min(self.order, other.order)
        return self.coeffs[:n] == other.coeffs[:n]

    # -- arithmetic ----------------------------------------------------

    def _lift(self, other) -> TruncSeries | None:
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncSeries([other], self.order)
        return None

    def __add__(self, other) -> TruncSeries:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[k] + other.coeffs[k] for k in range(n)], n)

    __radd__ = __add__

    def __neg__(self) -> TruncSeries:
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> TruncSeries:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> TruncSeries:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> TruncSeries:
        if isinstance(other, (int, Fraction)):
            return TruncSeries([c * other for c in self.coeffs], self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i in range(n):
            if a[i] == 0:
                continue
            for j in range(n - i):
                out[i + j] += a[i] * b[j]
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def reciprocal(self) -> TruncSeries:
        c0 = self.coeffs[0]
        if c0 == 0:
            raise NotInvertible("series has zero constant term")
        n = self.order
        out = [Fraction(0)] * n
        out[0] = 1 / c0
        for k in range(1, n):
            s = sum((self.coeffs[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
            out[k] = -s / c0
        return TruncSeries(out, n)

    def __truediv__(self, other) -> TruncSeries:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("series divided by zero")
            return TruncSeries([c / other for c in self.coeffs], self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        v = other.valuation
        if v >= other.order or v > self.valuation:
            raise DivisionByHigherValuation(
                f"divisor valuation {v} exceeds dividend valuation {self.valuation}")
        n = min(self.order, other.order) - v
        if n < 1:
            raise DivisionByHigherValuation("quotient would have no known coefficients")
        num = TruncSeries(self.coeffs[v:v + n], n)
        den = TruncSeries(other.coeffs[v:v + n], n)
        return num * den.reciprocal()

    def __pow__(self, n: int) -> TruncSeries:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.reciprocal() ** (-n)
        out = TruncSeries([1], self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- calculus ------------------------------------------------------

    def derivative(self) -> TruncSeries:
        """Formal derivative; known to one order less."""
        if self.order == 1:
            raise ValueError("derivative of an order-1 series is unknown")
        return TruncSeries([k * self.coeffs[k] for k in range(1, self.order)],
                           self.order - 1)

    def integral(self) -> TruncSeries:
        """Antiderivative with zero constant term; gains one order."""
        return TruncSeries([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)],
                           self.order + 1)

    def compose(self, g: TruncSeries) -> TruncSeries:
        """``self(g(t))``; ``g`` must have zero constant term."""
        if g.coeffs[0] != 0:
            raise NonzeroConstantTerm("inner series of a composition must vanish at 0")
        n = min(self.order, g.order)
        g = g.truncate(n)
        acc = TruncSeries([self.coeffs[n - 1]], n)
        for k in range(n - 2, -1, -1):
            acc = acc * g + self.coeffs[k]
        return acc

    def revert(self) -> TruncSeries:
        """Compositional inverse: ``g`` with ``self(g(t)) == t`` to the order.

        Triangular solve.  ``pw[k][m]`` holds the coefficient of ``t**m`` in
        ``g**k``; for ``k >= 2`` it only involves ``g_1 .. g_{m-1}``, so each
        new ``g_m`` is determined by already known quantities.
        """
        if self.order < 2 or self.coeffs[0] != 0 or self.coeffs[1] == 0:
            raise NotReversible("reversion needs valuation exactly 1")
        n = self.order
        f = self.coeffs
        g = [Fraction(0)] * n
        pw = [[Fraction(0)] * n for _ in range(n)]
        for m in range(1, n):
            for k in range(2, m + 1):
                prev = pw[k - 1]
                pw[k][m] = sum((g[i] * prev[m - i] for i in range(1, m - k + 2)),
                               Fraction(0))
            rhs = Fraction(1 if m == 1 else 0)
            rhs -= sum((f[k] * pw[k][m] for k in range(2, m + 1)), Fraction(0))
            g[m] = rhs / f[1]
            pw[1][m] = g[m]
        return TruncSeries(g, n)

    def exp(self) -> TruncSeries:
        if self.coeffs[0] != 0:
            raise NonzeroConstantTerm("exp of a series with nonzero constant term is not rational")
        n = self.order
        f = self.coeffs
        out = [Fraction(0)] * n
        out[0] = Fraction(1)
        for m in range(1, n):
            out[m] = sum((k * f[k] * out[m - k] for k in range(1, m + 1)),
                         Fraction(0)) / m
        return TruncSeries(out, n)

    def log(self) -> TruncSeries:
        if self.coeffs[0] != 1:
            raise ConstantTermNotOne("log of a series needs constant term 1")
        n = self.order
        f = self.coeffs
        # L' = f'/f, solved as f * L' = f' coefficientwise
        out = [Fraction(0)] * n
        for m in range(1, n):
            s = m * f[m] - sum((k * out[k] * f[m - k] for k in range(1, m)),
                               Fraction(0))
            out[m] = s / m
        return TruncSeries(out, n)

    def power(self, lam) -> TruncSeries:
        """Rational power; non-integers go through ``exp(lam * log(self))``."""
        lam = Fraction(lam)
        if lam.denominator == 1:
            return self ** int(lam)
        return (self.log() * lam).exp()


def series_arith(f: TruncSeries, g: TruncSeries, kind: str) -> TruncSeries:
    ops = {"add": f.__add__, "sub": f.__sub__, "mul": f.__mul__, "div": f.__truediv__}
    if kind not in ops:
        raise ValueError(f"unknown kind {kind!r}")
    return ops[kind](g)


def series_exp_log(f: TruncSeries, kind: str) -> TruncSeries:
    if kind == "exp":
        return f.exp()
    if kind == "log":
        return f.log()
    raise ValueError(f"unknown kind {kind!r}")
