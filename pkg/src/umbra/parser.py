"""Recursive-descent parser for operator and polynomial expressions.

Grammar (whitespace-insensitive, left-associative, ``^`` binds tightest)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('+' | '-') factor | base ('^' signed-int)?
    base   := integer | 'd' | 'x' | name '(' args ')' | '(' expr ')' | name

``p/q`` rationals fall out of ``/`` between integer literals.  The only
function calls are ``exp`` and ``log``; other names are catalog operators
(``delta``, ``shift(1/2)`` ...) or parameters bound through ``lets``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import (
    ExprSyntaxError,
    MissingParam,
    NonPolynomial,
    NotShiftInvariant,
    PreconditionError,
    UnboundName,
)
from .factorial import CLASSICAL, FactorialSystem
from .operators import (
    CATALOG_NAMES,
    EXPLICIT_CATALOG,
    Operator,
    ShiftInvariant,
    catalog_operator,
)
from .poly import Poly
from .series import DEFAULT_ORDER, TruncSeries

FUNCTIONS = ("exp", "log")


# -- tree -------------------------------------------------------------------

@dataclass(frozen=True)
class Node:
    pos: int = field(default=0, compare=False, kw_only=True)
    end: int = field(default=0, compare=False, kw_only=True)


@dataclass(frozen=True)
class RationalLiteral(Node):
    value: Fraction


@dataclass(frozen=True)
class SymbolD(Node):
    pass


@dataclass(frozen=True)
class SymbolX(Node):
    pass


@dataclass(frozen=True)
class Add(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Sub(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Mul(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Div(Node):
    left: Node
    right: Node


@dataclass(frozen=True)
class Neg(Node):
    arg: Node


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exponent: int


@dataclass(frozen=True)
class Call(Node):
    name: str
    arg: Node


@dataclass(frozen=True)
class NamedAtom(Node):
    name: str
    params: tuple[Fraction, ...] = ()


@dataclass(frozen=True)
class ExprTree:
    """Parsed expression together with its source text."""

    root: Node
    text: str

    def snippet(self, node: Node) -> str:
        raw = self.text.encode("utf-8")
        return raw[node.pos:node.end].decode("utf-8", "replace")


# -- tokenizer ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\S))")
_OPS = set("+-*/^(),")


@dataclass
class _Tok:
    kind: str  # int, name, op, eof
    text: str
    pos: int
    end: int


def _tokenize(text: str) -> list[_Tok]:
    raw = text.encode("utf-8")
    toks: list[_Tok] = []
    i = 0
    # work on the decoded string but report byte offsets
    byte_at = [0]
    for ch in text:
        byte_at.append(byte_at[-1] + len(ch.encode("utf-8")))
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:  # only trailing whitespace remains
            break
        kind = m.lastgroup
        start, end = m.start(kind), m.end(kind)
        if kind == "op" and m.group("op") not in _OPS:
            raise ExprSyntaxError(f"unexpected character {m.group('op')!r}", byte_at[start])
        toks.append(_Tok(kind, m.group(kind), byte_at[start], byte_at[end]))
        i = m.end()
    toks.append(_Tok("eof", "", len(raw), len(raw)))
    return toks


# -- parser -------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, lets: Mapping[str, object]):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.lets = {k: Fraction(v) for k, v in lets.items()}

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def accept(self, op: str) -> _Tok | None:
        if self.tok.kind == "op" and self.tok.text == op:
            return self.advance()
        return None

    def expect(self, op: str) -> _Tok:
        t = self.accept(op)
        if t is None:
            found = self.tok.text or "end of input"
            raise ExprSyntaxError(f"expected {op!r}, found {found!r}", self.tok.pos)
        return t

    def parse(self) -> Node:
        if self.tok.kind == "eof":
            raise ExprSyntaxError("empty expression", 0)
        node = self.expr()
        if self.tok.kind != "eof":
            raise ExprSyntaxError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            if self.accept("+"):
                right = self.term()
                node = Add(node, right, pos=node.pos, end=right.end)
            elif self.accept("-"):
                right = self.term()
                node = Sub(node, right, pos=node.pos, end=right.end)
            else:
                return node

    def term(self) -> Node:
        node = self.factor()
        while True:
            if self.accept("*"):
                right = self.factor()
                node = Mul(node, right, pos=node.pos, end=right.end)
            elif self.accept("/"):
                right = self.factor()
                node = Div(node, right, pos=node.pos, end=right.end)
            else:
                return node

    def factor(self) -> Node:
        start = self.tok.pos
        if self.accept("-"):
            arg = self.factor()
            return Neg(arg, pos=start, end=arg.end)
        if self.accept("+"):
            return self.factor()
        node = self.base()
        if self.accept("^"):
            sign = -1 if self.accept("-") else 1
            if sign == 1:
                self.accept("+")
            t = self.tok
            if t.kind != "int":
                raise ExprSyntaxError("exponent must be an integer", t.pos)
            self.advance()
            node = Pow(node, sign * int(t.text), pos=node.pos, end=t.end)
        return node

    def base(self) -> Node:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return RationalLiteral(Fraction(int(t.text)), pos=t.pos, end=t.end)
        if t.kind == "op" and t.text == "(":
            self.advance()
            inner = self.expr()
            close = self.expect(")")
            return _respan(inner, t.pos, close.end)
        if t.kind == "name":
            self.advance()
            return self.named(t)
        found = t.text or "end of input"
        raise ExprSyntaxError(f"unexpected {found!r}", t.pos)

    def named(self, t: _Tok) -> Node:
        name = t.text
        if name in self.lets:
            return RationalLiteral(self.lets[name], pos=t.pos, end=t.end)
        if name == "d":
            return SymbolD(pos=t.pos, end=t.end)
        if name == "x":
            return SymbolX(pos=t.pos, end=t.end)
        if name in FUNCTIONS:
            self.expect("(")
            arg = self.expr()
            close = self.expect(")")
            return Call(name, arg, pos=t.pos, end=close.end)
        if name in CATALOG_NAMES:
            params: list[Fraction] = []
            end = t.end
            if self.accept("("):
                params.append(self.constant(self.expr()))
                while self.accept(","):
                    params.append(self.constant(self.expr()))
                end = self.expect(")").end
            if name in ("shift", "abel") and len(params) != 1:
                raise MissingParam(f"{name} takes exactly one parameter (at byte {t.pos})")
            if name not in ("shift", "abel") and params:
                raise ExprSyntaxError(f"{name} takes no parameters", t.pos)
            return NamedAtom(name, tuple(params), pos=t.pos, end=end)
        raise UnboundName(name, t.pos)

    def constant(self, node: Node) -> Fraction:
        try:
            p = _to_poly(node)
        except NonPolynomial:
            p = None
        if p is None or p.degree > 0:
            raise ExprSyntaxError("operator parameter must be a rational constant", node.pos)
        return p[0]


def _respan(node: Node, pos: int, end: int) -> Node:
    object.__setattr__(node, "pos", pos)
    object.__setattr__(node, "end", end)
    return node


def parse_operator_expr(text: str, lets: Mapping[str, object] | None = None) -> ExprTree:
    return ExprTree(_Parser(text, lets or {}).parse(), text)


parse_expr = parse_operator_expr


# -- polynomials ------------------------------------------------------------

def _to_poly(node: Node) -> Poly:
    if isinstance(node, RationalLiteral):
        return Poly([node.value])
    if isinstance(node, SymbolX):
        return Poly([0, 1])
    if isinstance(node, Add):
        return _to_poly(node.left) + _to_poly(node.right)
    if isinstance(node, Sub):
        return _to_poly(node.left) - _to_poly(node.right)
    if isinstance(node, Mul):
        return _to_poly(node.left) * _to_poly(node.right)
    if isinstance(node, Neg):
        return -_to_poly(node.arg)
    if isinstance(node, Div):
        den = _to_poly(node.right)
        if den.degree != 0:
            what = "zero" if den.is_zero() else "a non-constant"
            raise NonPolynomial(f"division by {what} expression (at byte {node.right.pos})")
        return _to_poly(node.left) / den[0]
    if isinstance(node, Pow):
        if node.exponent < 0:
            raise NonPolynomial(f"negative exponent (at byte {node.pos})")
        return _to_poly(node.base) ** node.exponent
    if isinstance(node, SymbolD):
        raise NonPolynomial(f"'d' in a polynomial (at byte {node.pos})")
    if isinstance(node, (Call, NamedAtom)):
        raise NonPolynomial(f"{node.name!r} in a polynomial (at byte {node.pos})")
    raise TypeError(node)


def parse_polynomial(text: str, lets: Mapping[str, object] | None = None) -> Poly:
    return _to_poly(parse_operator_expr(text, lets).root)


# -- elaboration ------------------------------------------------------------

class _Elaborator:
    def __init__(self, tree: ExprTree, order: int, fs: FactorialSystem):
        self.tree = tree
        self.order = order
        self.fs = fs

    def run(self) -> TruncSeries:
        return self.series(self.tree.root)

    def series(self, node: Node) -> TruncSeries:
        try:
            return self._series(node)
        except PreconditionError as e:
            if not getattr(e, "located", False):
                e.args = (f"{e.args[0] if e.args else e.kind} "
                          f"[in {self.tree.snippet(node)!r} at byte {node.pos}]",)
                e.located = True
                e.offset = node.pos
            raise

    def _series(self, node: Node) -> TruncSeries:
        m = self.order
        if isinstance(node, RationalLiteral):
            return TruncSeries([node.value], m)
        if isinstance(node, SymbolD):
            return TruncSeries.variable(m)
        if isinstance(node, SymbolX):
            raise ExprSyntaxError("'x' is not allowed in an operator expression", node.pos)
        if isinstance(node, Add):
            return self.series(node.left) + self.series(node.right)
        if isinstance(node, Sub):
            return self.series(node.left) - self.series(node.right)
        if isinstance(node, Mul):
            return self.series(node.left) * self.series(node.right)
        if isinstance(node, Div):
            return self.series(node.left) / self.series(node.right)
        if isinstance(node, Neg):
            return -self.series(node.arg)
        if isinstance(node, Pow):
            return self.series(node.base) ** node.exponent
        if isinstance(node, Call):
            arg = self.series(node.arg)
            return arg.exp() if node.name == "exp" else arg.log()
        if isinstance(node, NamedAtom):
            op = _catalog_atom(node, self.fs, m)
            return op.indicator_at(m).truncate(m)
        raise TypeError(node)


def _catalog_atom(node: NamedAtom, fs: FactorialSystem, order: int) -> ShiftInvariant:
    if node.name in EXPLICIT_CATALOG:
        raise NotShiftInvariant(
            f"{node.name} is an explicit action and cannot appear inside an expression")
    params = {"a": node.params[0]} if node.params else {}
    return catalog_operator(node.name, params, fs, order)


def elaborate_series(tree: ExprTree, order: int, fs: FactorialSystem = CLASSICAL) -> TruncSeries:
    """Indicator series of ``tree`` at ``order``; division may shorten it."""
    return _Elaborator(tree, order, fs).run()


def elaborate(tree: ExprTree, order: int = DEFAULT_ORDER,
              fs: FactorialSystem = CLASSICAL) -> ShiftInvariant:
    """Shift-invariant operator whose recipe re-elaborates ``tree`` on demand."""
    root = tree.root
    if isinstance(root, NamedAtom):
        return _catalog_atom(root, fs, order)
    label = tree.text.strip()

    def recipe(m: int) -> TruncSeries:
        target = m
        for _ in range(8):
            s = elaborate_series(tree, target, fs)
            if s.order >= m:
                return s
            target += m - s.order
        return s

    return ShiftInvariant(elaborate_series(tree, order, fs), fs, recipe, label, label)


def operator_from_text(text: str, lets: Mapping[str, object] | None = None,
                       order: int = DEFAULT_ORDER,
                       fs: FactorialSystem = CLASSICAL) -> Operator:
    """Catalog name (explicit actions included) or a parsed, elaborated expression."""
    name = text.strip()
    if name in EXPLICIT_CATALOG:
        return catalog_operator(name)
    return elaborate(parse_operator_expr(text, lets), order, fs)

