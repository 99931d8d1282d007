"""Polynomial sequences: basic (binomial type), Sheffer, cross and Steffensen
sequences, expansions in such bases, connection constants and umbral
composition/inversion."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import LengthMismatch, MixedFactorialSystems, NotInvertible, NotTriangular
from .factorial import CLASSICAL, FactorialSystem
from .operators import Operator, ShiftInvariant, classify, require_delta
from .poly import Poly, falling_factorial


class PolySequence(Sequence[Poly]):
    """Triangular sequence ``p_0 .. p_N`` with ``deg p_n == n``."""

    def __init__(self, polys: Iterable[Poly], meta: str = ""):
        self.polys = tuple(polys)
        self.meta = meta
        for n, p in enumerate(self.polys):
            if p.degree != n:
                raise NotTriangular(f"p_{n} has degree {p.degree}")

    def __getitem__(self, i):
        return self.polys[i]

    def __len__(self) -> int:
        return len(self.polys)

    def __eq__(self, other) -> bool:
        if isinstance(other, PolySequence):
            return self.polys == other.polys
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.polys)

    def __repr__(self) -> str:
        return f"PolySequence({self.meta or 'n=' + str(len(self) - 1)})"


def powers(n: int) -> PolySequence:
    return PolySequence((Poly.monomial(k) for k in range(n + 1)), "powers")


def lower_factorials(n: int) -> PolySequence:
    return PolySequence((falling_factorial(k) for k in range(n + 1)), "lowerfact")


def _check_fs(op: ShiftInvariant, fs: FactorialSystem | None) -> FactorialSystem:
    if fs is not None and fs != op.fs:
        raise MixedFactorialSystems(f"operator uses {op.fs.name}, asked for {fs.name}")
    return op.fs


def basic_sequence(q: Operator, n: int, fs: FactorialSystem | None = None) -> PolySequence:
    """Basic sequence of the delta operator ``q``.

    Unique triangular solution of ``q p_k = a(k) p_{k-1}``, ``p_k(0) = 0`` for
    ``k > 0`` and ``p_0 = 1``.  Each ``p_k`` is solved from its top
    coefficient down: the ``x**m`` coefficient of ``q p_k`` is
    ``sum_{j>m} u_j c_{j-m} [j]!/[m]!``.
    """
    q = require_delta(q)
    fs = _check_fs(q, fs)
    c = q.indicator_at(n + 1).coeffs
    seq = [Poly([1])]
    for k in range(1, n + 1):
        target = seq[-1] * fs.a(k)
        u = [Fraction(0)] * (k + 1)
        for m in range(k - 1, -1, -1):
            s = target[m]
            for j in range(m + 2, k + 1):
                if u[j]:
                    s -= u[j] * c[j - m] * fs.falling(j, j - m)
            u[m + 1] = s / (c[1] * fs.falling(m + 1, 1))
        seq.append(Poly(u))
    return PolySequence(seq, f"basic({q.name})")


def _require_invertible(s: Operator) -> ShiftInvariant:
    if not isinstance(s, ShiftInvariant) or classify(s) != "invertible":
        raise NotInvertible(f"{s.name} is not invertible")
    return s


def sheffer_sequence(s: Operator, q: Operator, n: int,
                     fs: FactorialSystem | None = None) -> PolySequence:
    """``s_k = S^{-1} p_k`` for the basic sequence ``p`` of ``q``."""
    s = _require_invertible(s)
    q = require_delta(q)
    _check_fs(s, q.fs)
    basis = basic_sequence(q, n, fs)
    sinv = s.inverse()
    return PolySequence((sinv(p) for p in basis), f"sheffer({s.name}, {q.name})")


def cross_sequence(s: Operator, lam, q: Operator, n: int) -> PolySequence:
    """``p_k^(lam) = S^lam p_k``; classical system."""
    q = require_delta(q)
    if not isinstance(s, ShiftInvariant):
        raise NotInvertible(f"{s.name} is not shift-invariant")
    _check_fs(q, CLASSICAL)
    _check_fs(s, CLASSICAL)
    slam = s.power(lam)
    return PolySequence((slam(p) for p in basic_sequence(q, n)),
                        f"cross({s.name}, {lam}, {q.name})")


def steffensen_sequence(s: Operator, q: Operator, n: int) -> PolySequence:
    """Diagonal of the cross-sequence family: ``s_k = S^k p_k``."""
    q = require_delta(q)
    if not isinstance(s, ShiftInvariant):
        raise NotInvertible(f"{s.name} is not shift-invariant")
    _check_fs(q, CLASSICAL)
    _check_fs(s, CLASSICAL)
    basis = basic_sequence(q, n)
    return PolySequence((s.power(k)(p) for k, p in enumerate(basis)),
                        f"steffensen({s.name}, {q.name})")


def basic_expansion(p: Poly, q: Operator, fs: FactorialSystem | None = None) -> list[Fraction]:
    """Coefficients ``e_k = (q^k p)(0) / [k]!`` with ``p = sum e_k p_k``."""
    q = require_delta(q)
    fs = _check_fs(q, fs)
    out = []
    term = p
    for k in range(p.degree + 1):
        out.append(term(0) / fs.factorial(k))
        term = q(term)
    return out


def sheffer_expansion(p: Poly, s: Operator, q: Operator,
                      fs: FactorialSystem | None = None) -> list[Fraction]:
    """Coefficients ``e_k = (S q^k p)(0) / [k]!`` with ``p = sum e_k s_k``."""
    s = _require_invertible(s)
    q = require_delta(q)
    fs = _check_fs(q, fs)
    _check_fs(s, fs)
    out = []
    term = p
    for k in range(p.degree + 1):
        out.append(s(term)(0) / fs.factorial(k))
        term = q(term)
    return out


def connection_constants(a: PolySequence, b: PolySequence) -> list[list[Fraction]]:
    """Lower-triangular ``c`` with ``a_n = sum_k c[n][k] b_k``."""
    if len(a) != len(b):
        raise LengthMismatch(f"lengths {len(a)} and {len(b)}")
    a, b = PolySequence(a), PolySequence(b)
    rows = []
    for p in a:
        rest = p
        row = [Fraction(0)] * len(a)
        for k in range(p.degree, -1, -1):
            coef = rest[k] / b[k][k]
            row[k] = coef
            if coef:
                rest = rest - b[k] * coef
        rows.append(row)
    return rows


def umbral_compose(p: PolySequence, r: PolySequence) -> PolySequence:
    """``(p o r)_n = sum_k a_{n,k} r_k`` where ``p_n = sum_k a_{n,k} x^k``."""
    if len(p) != len(r):
        raise LengthMismatch(f"lengths {len(p)} and {len(r)}")
    p, r = PolySequence(p), PolySequence(r)
    out = []
    for pn in p:
        acc = Poly()
        for k, a in enumerate(pn.coeffs):
            if a:
                acc = acc + r[k] * a
        out.append(acc)
    return PolySequence(out, "umbral composition")


def umbral_inverse(p: PolySequence) -> PolySequence:
    """The ``r`` with ``p o r == powers``: rows of the inverse coefficient matrix."""
    p = PolySequence(p)
    rows = connection_constants(powers(len(p) - 1), p)
    return PolySequence((Poly(row) for row in rows), "umbral inverse")
