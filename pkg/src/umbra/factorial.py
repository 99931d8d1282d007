"""Generalized factorial systems.

A system is a sequence ``a(1), a(2), ...`` of nonzero rationals.  It defines
the generalized derivative ``D x**n = a(n) x**(n-1)`` and the factorials
``[n]! = a(1) a(2) ... a(n)``.
"""
from __future__ import annotations

import itertools
import threading
from fractions import Fraction
from typing import Callable

from .errors import OutOfRange, ZeroFactorIllegal

_custom_ids = itertools.count()


class FactorialSystem:
    """Memoized generalized factorials.

    Two systems compare equal when their names match; predefined systems get
    canonical names (``classical``, ``gaussian:2`` ...) and custom ones a
    unique name unless one is supplied.
    """

    def __init__(self, a: Callable[[int], object], name: str):
        self._a = a
        self.name = name
        self._fact = [Fraction(1)]
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"FactorialSystem({self.name!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactorialSystem):
            return NotImplemented
        return self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)

    @property
    def is_classical(self) -> bool:
        return self.name == "classical"

    def a(self, n: int) -> Fraction:
        if n < 1:
            raise OutOfRange(f"a(n) is defined for n >= 1, got {n}")
        v = Fraction(self._a(n))
        if v == 0:
            raise ZeroFactorIllegal(f"a({n}) = 0 in factorial system {self.name}")
        return v

    def factorial(self, n: int) -> Fraction:
        if n < 0:
            raise OutOfRange(f"[n]! needs n >= 0, got {n}")
        fact = self._fact
        if n < len(fact):
            return fact[n]
        with self._lock:
            while len(self._fact) <= n:
                m = len(self._fact)
                self._fact.append(self._fact[-1] * self.a(m))
            return self._fact[n]

    def falling(self, n: int, k: int) -> Fraction:
        """``[n]!/[n-k]! = a(n) a(n-1) ... a(n-k+1)``, the factor in ``D^k x^n``."""
        if k > n:
            return Fraction(0)
        return self.factorial(n) / self.factorial(n - k)

    def binomial(self, n: int, k: int) -> Fraction:
        if k < 0 or k > n:
            raise OutOfRange(f"need 0 <= k <= n, got n={n}, k={k}")
        return self.factorial(n) / (self.factorial(k) * self.factorial(n - k))


def classical() -> FactorialSystem:
    return FactorialSystem(lambda n: n, "classical")


def divided() -> FactorialSystem:
    return FactorialSystem(lambda n: 1, "divided")


def hyperbolic() -> FactorialSystem:
    return FactorialSystem(lambda n: 2 * n * (2 * n - 1), "hyperbolic")


def gaussian(q) -> FactorialSystem:
    # sum form 1 + q + ... + q^(n-1): q = 1 gives the classical numbers
    q = Fraction(q)

    def a(n: int) -> Fraction:
        return sum((q ** i for i in range(n)), Fraction(0))

    return FactorialSystem(a, f"gaussian:{q}")


def custom(a: Callable[[int], object], name: str | None = None) -> FactorialSystem:
    return FactorialSystem(a, name or f"custom#{next(_custom_ids)}")


CLASSICAL = classical()


def make_factorial_system(kind: str, q=None, a=None, name: str | None = None) -> FactorialSystem:
    """Build a system by kind: classical, divided, hyperbolic, gaussian, custom.

    ``kind`` may also be given as ``"gaussian:q"`` with a rational ``q``.
    """
    if kind.startswith("gaussian:"):
        kind, q = "gaussian", Fraction(kind.split(":", 1)[1])
    if kind == "classical":
        return classical()
    if kind == "divided":
        return divided()
    if kind == "hyperbolic":
        return hyperbolic()
    if kind == "gaussian":
        if q is None:
            raise ValueError("gaussian factorial system needs q")
        return gaussian(q)
    if kind == "custom":
        if a is None:
            raise ValueError("custom factorial system needs a(n)")
        return custom(a, name)
    raise ValueError(f"unknown factorial system {kind!r}")


def factorial_of(fs: FactorialSystem, n: int) -> Fraction:
    return fs.factorial(n)


def gen_binomial(fs: FactorialSystem, n: int, k: int) -> Fraction:
    return fs.binomial(n, k)
