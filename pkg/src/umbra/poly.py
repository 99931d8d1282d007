"""Dense univariate polynomials over the rationals."""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Union

Scalar = Fraction
ScalarLike = Union[Fraction, int]


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``x**i``.

    The coefficient tuple never ends in a zero, so the zero polynomial is the
    empty tuple and ``degree`` is ``len(coeffs) - 1`` (``-1`` for zero).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        object.__setattr__(self, "coeffs", _trim([Fraction(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c: ScalarLike) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: ScalarLike = 1) -> Poly:
        return cls([0] * n + [c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        from .printing import format_poly
        return f"Poly({format_poly(self)!r})"

    # -- evaluation ----------------------------------------------------

    def __call__(self, x0: ScalarLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    eval = __call__

    def shift(self, a: ScalarLike) -> Poly:
        """Return ``p(x + a)``."""
        a = Fraction(a)
        n = len(self.coeffs)
        out = [Fraction(0)] * n
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            apow = Fraction(1)
            for i in range(j, -1, -1):
                out[i] += c * comb(j, i) * apow
                apow *= a
        return Poly(out)

    # -- ring operations -----------------------------------------------

    def __add__(self, other) -> Poly:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> Poly:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, c: ScalarLike) -> Poly:
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        c = Fraction(c)
        return Poly([a / c for a in self.coeffs])

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- calculus ------------------------------------------------------

    def derivative(self) -> Poly:
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def integral(self) -> Poly:
        """Antiderivative vanishing at 0."""
        return Poly([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def compose(self, inner: Poly) -> Poly:
        """Return ``p(inner(x))``."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc


def _coerce(v) -> Poly | None:
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly([v])
    return None


def poly_arith(p: Poly, q: Poly, kind: str) -> Poly:
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown kind {kind!r}")


def falling_factorial(n: int) -> Poly:
    """``x (x-1) ... (x-n+1)``."""
    out = Poly([1])
    for i in range(n):
        out = out * Poly([-i, 1])
    return out
