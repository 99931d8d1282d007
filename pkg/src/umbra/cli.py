"""``umbra`` command-line tool.

Exit codes: 0 success, 2 usage or parse error, 3 mathematical precondition
violated (``NotDelta``, ``NotInvertible`` ...).  Errors are reported on one
stderr line as ``umbra: error: <Kind>: <message>``.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import printing
from .errors import InputError, PreconditionError, UmbraError
from .factorial import make_factorial_system
from .operators import (
    CATALOG_HELP,
    CATALOG_NAMES,
    EXPLICIT_CATALOG,
    km_expansion,
    operator_expansion,
)
from .parser import operator_from_text, parse_polynomial
from .sequences import (
    PolySequence,
    basic_expansion,
    basic_sequence,
    connection_constants,
    cross_sequence,
    lower_factorials,
    powers,
    sheffer_expansion,
    sheffer_sequence,
    steffensen_sequence,
    umbral_compose,
    umbral_inverse,
)
from .series import DEFAULT_ORDER

EXIT_OK, EXIT_USAGE, EXIT_MATH = 0, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _let(text: str) -> tuple[str, Fraction]:
    name, sep, value = text.partition("=")
    if not sep or not name.strip():
        raise argparse.ArgumentTypeError(f"expected name=p/q, got {text!r}")
    return name.strip(), _rational(value)


def _factorial(text: str):
    try:
        return make_factorial_system(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"expected classical|divided|hyperbolic|gaussian:q, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--order", type=int, default=DEFAULT_ORDER, metavar="N",
                        help="truncation order of operator series (default 16; "
                             "Maple's Order defaults to 6)")
    common.add_argument("--factorial", type=_factorial, default="classical",
                        metavar="SYSTEM",
                        help="classical | divided | hyperbolic | gaussian:q "
                             "(default classical)")
    common.add_argument("--let", type=_let, action="append", default=[],
                        metavar="NAME=P/Q", help="bind a parameter (repeatable)")
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")

    parser = _Parser(prog="umbra", description="Exact umbral calculus on polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_):
        return sub.add_parser(name, parents=[common], help=help_, description=help_)

    p = cmd("apply", "apply an operator to a polynomial")
    p.add_argument("--op", required=True)
    p.add_argument("--poly", required=True)

    p = cmd("basic", "basic sequence p_0..p_N of a delta operator")
    p.add_argument("--op", required=True)
    p.add_argument("--n", type=int, required=True)

    p = cmd("sheffer", "Sheffer sequence s_n = S^-1 p_n")
    p.add_argument("--s", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--n", type=int, required=True)

    p = cmd("cross", "cross-sequence S^lambda p_n (classical system)")
    p.add_argument("--s", required=True)
    p.add_argument("--lambda", dest="lam", type=_rational, required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--n", type=int, required=True)

    p = cmd("steffensen", "Steffensen sequence S^n p_n (classical system)")
    p.add_argument("--s", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--n", type=int, required=True)

    p = cmd("expand-op", "expand T in powers of a delta operator; --order is the "
                         "number of coefficients")
    p.add_argument("--t", required=True)
    p.add_argument("--in", dest="base", required=True)

    p = cmd("km-expand", "expand an operator as sum b_k(x) d^k; --order is the "
                         "number of coefficients")
    p.add_argument("--t", required=True,
                   help="explicit-action catalog name (integral0, bernoulliInt) "
                        "or an operator expression")

    p = cmd("expand-poly", "coefficients of a polynomial in a basic or Sheffer basis")
    p.add_argument("--poly", required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--s")

    seq_help = "sequence spec: powers | lowerfact | basic:<op-expr>"
    p = cmd("cc", "connection constants: A_n = sum_k c[n][k] B_k")
    p.add_argument("--a", required=True, help=seq_help)
    p.add_argument("--b", required=True, help=seq_help)
    p.add_argument("--n", type=int, required=True)

    p = cmd("uc", "umbral composition A o B")
    p.add_argument("--a", required=True, help=seq_help)
    p.add_argument("--b", required=True, help=seq_help)
    p.add_argument("--n", type=int, required=True)

    p = cmd("ui", "umbral inverse of A")
    p.add_argument("--a", required=True, help=seq_help)
    p.add_argument("--n", type=int, required=True)

    cmd("catalog", "list the built-in operators")
    return parser


class _Context:
    def __init__(self, args):
        self.order = args.order
        self.fs = args.factorial
        self.lets = dict(args.let)

    def op(self, text: str):
        return operator_from_text(text, self.lets, self.order, self.fs)

    def poly(self, text: str):
        return parse_polynomial(text, self.lets)

    def sequence(self, spec: str, n: int) -> PolySequence:
        kind, _, rest = spec.partition(":")
        kind = kind.strip()
        if kind == "powers" and not rest:
            return powers(n)
        if kind == "lowerfact" and not rest:
            return lower_factorials(n)
        if kind == "basic" and rest:
            return basic_sequence(self.op(rest), n, self.fs)
        raise _UsageError(f"bad sequence spec {spec!r}; expected powers, lowerfact "
                          f"or basic:<op-expr>")


def _render(value, fmt: str) -> str:
    if fmt == "json":
        return printing.emit_json(value)
    if isinstance(value, list) and not (value and isinstance(value[0], list)):
        return printing.format_matrix([value], fmt)
    return printing.print_expr(value, fmt)


def _catalog(fmt: str) -> str:
    rows = []
    for name in CATALOG_NAMES:
        kind = "explicit" if name in EXPLICIT_CATALOG else "shift-invariant"
        label = f"{name}(a)" if name in ("shift", "abel") else name
        rows.append((label, kind, CATALOG_HELP[name]))
    if fmt == "json":
        items = [{"name": n, "kind": k, "help": h} for n, k, h in rows]
        return json.dumps({"operators": items}, separators=(",", ":"))
    width = max(len(n) for n, _, _ in rows)
    return "\n".join(f"{n:<{width}}  {h}" for n, _, h in rows)


def run(args) -> str:
    ctx = _Context(args)
    c = args.command
    if c == "apply":
        return _render(ctx.op(args.op)(ctx.poly(args.poly)), args.format)
    if c == "basic":
        return _render(basic_sequence(ctx.op(args.op), args.n, ctx.fs), args.format)
    if c == "sheffer":
        return _render(sheffer_sequence(ctx.op(args.s), ctx.op(args.q), args.n, ctx.fs),
                       args.format)
    if c == "cross":
        return _render(cross_sequence(ctx.op(args.s), args.lam, ctx.op(args.q), args.n),
                       args.format)
    if c == "steffensen":
        return _render(steffensen_sequence(ctx.op(args.s), ctx.op(args.q), args.n),
                       args.format)
    if c == "expand-op":
        return _render(operator_expansion(ctx.op(args.t), ctx.op(args.base), args.order),
                       args.format)
    if c == "km-expand":
        return _render(km_expansion(ctx.op(args.t), args.order), args.format)
    if c == "expand-poly":
        p = ctx.poly(args.poly)
        if args.s:
            coeffs = sheffer_expansion(p, ctx.op(args.s), ctx.op(args.q), ctx.fs)
        else:
            coeffs = basic_expansion(p, ctx.op(args.q), ctx.fs)
        return _render(coeffs, args.format)
    if c == "cc":
        return _render(connection_constants(ctx.sequence(args.a, args.n),
                                            ctx.sequence(args.b, args.n)), args.format)
    if c == "uc":
        return _render(umbral_compose(ctx.sequence(args.a, args.n),
                                      ctx.sequence(args.b, args.n)), args.format)
    if c == "ui":
        return _render(umbral_inverse(ctx.sequence(args.a, args.n)), args.format)
    if c == "catalog":
        return _catalog(args.format)
    raise _UsageError(f"unknown command {c!r}")


def _fail(kind: str, message: str, code: int) -> int:
    message = " ".join(str(message).split())
    print(f"umbra: error: {kind}: {message}", file=sys.stderr)
    return code


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "n", 0) is not None and getattr(args, "n", 0) < 0:
            raise _UsageError("--n must be nonnegative")
        if args.order < 1:
            raise _UsageError("--order must be positive")
        out = run(args)
    except _UsageError as e:
        return _fail("Usage", e, EXIT_USAGE)
    except InputError as e:
        return _fail(e.kind, e, EXIT_USAGE)
    except PreconditionError as e:
        return _fail(e.kind, e, EXIT_MATH)
    except UmbraError as e:
        return _fail(e.kind, e, EXIT_MATH)
    sys.stdout.write(out + "\n")
    return EXIT_OK


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
