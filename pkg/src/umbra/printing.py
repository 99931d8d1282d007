"""Text, LaTeX and JSON rendering.

Text output is meant to be read back by :func:`umbra.parser.parse_polynomial`
(polynomials print in descending powers, rationals as ``p/q``).  JSON keeps
every rational as a string so nothing is lost to floating point.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .operators import KMExpansionResult, OperatorExpansionResult
from .poly import Poly
from .sequences import PolySequence
from .series import TruncSeries

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*(\([^()]*\))?")


def format_scalar(c: Fraction) -> str:
    return str(Fraction(c))


def _latex_scalar(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def _atom(var: str, k: int, fmt: str) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{{{k}}}" if fmt == "latex" else f"{var}^{k}"


def _join_terms(terms: list[tuple[Fraction, str]], fmt: str) -> str:
    """Render ``sum(c * atom)``; an empty atom is the constant term."""
    parts: list[str] = []
    for c, atom in terms:
        if c == 0:
            continue
        neg = c < 0
        mag = -c if neg else c
        if not atom:
            body = _latex_scalar(mag) if fmt == "latex" else format_scalar(mag)
        elif mag == 1:
            body = atom
        elif fmt == "latex":
            body = f"{_latex_scalar(mag)} {atom}"
        else:
            body = f"{format_scalar(mag)}*{atom}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts) or "0"


def format_poly(p: Poly, fmt: str = "text", var: str = "x") -> str:
    terms = [(c, _atom(var, k, fmt)) for k, c in reversed(list(enumerate(p.coeffs)))]
    return _join_terms(terms, fmt)


def _big_o(var: str, m: int, fmt: str) -> str:
    return f"O({_atom(var, m, fmt)})"


def format_series(s: TruncSeries, fmt: str = "text", var: str = "t") -> str:
    terms = [(c, _atom(var, k, fmt)) for k, c in enumerate(s.coeffs)]
    body = _join_terms(terms, fmt)
    tail = _big_o(var, s.order, fmt)
    return tail if body == "0" else f"{body} + {tail}"


def base_label(res: OperatorExpansionResult) -> str:
    name = res.base.name
    return name if _IDENT.fullmatch(name) else f"({name})"


def format_expansion(res: OperatorExpansionResult, fmt: str = "text") -> str:
    var = base_label(res)
    if fmt == "latex":
        var = {"delta": r"\Delta", "nabla": r"\nabla"}.get(var, var)
    terms = [(c, _atom(var, k, fmt)) for k, c in enumerate(res.coeffs)]
    body = _join_terms(terms, fmt)
    tail = _big_o(var, res.order, fmt)
    return tail if body == "0" else f"{body} + {tail}"


def format_km(res: KMExpansionResult, fmt: str = "text") -> str:
    parts = []
    for k, b in enumerate(res.coeffs):
        if b.is_zero():
            continue
        poly = format_poly(b, fmt)
        if k == 0:
            parts.append(poly)
            continue
        if fmt == "latex":
            parts.append(rf"\left({poly}\right) {_atom('d', k, fmt)}")
        else:
            parts.append(f"({poly})*{_atom('d', k, fmt)}")
    parts.append(_big_o("d", res.order, fmt))
    return " + ".join(parts)


def format_sequence(seq: PolySequence, fmt: str = "text") -> str:
    return "\n".join(format_poly(p, fmt) for p in seq)


def format_matrix(rows, fmt: str = "text") -> str:
    if fmt == "latex":
        body = r" \\ ".join(" & ".join(_latex_scalar(Fraction(c)) for c in row)
                            for row in rows)
        return rf"\begin{{pmatrix}} {body} \end{{pmatrix}}"
    return "\n".join(" ".join(format_scalar(c) for c in row) for row in rows)


def print_expr(value, fmt: str = "text") -> str:
    """Render a polynomial, series, expansion, sequence or matrix."""
    if fmt not in ("text", "latex"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(value, Poly):
        return format_poly(value, fmt)
    if isinstance(value, TruncSeries):
        return format_series(value, fmt)
    if isinstance(value, OperatorExpansionResult):
        return format_expansion(value, fmt)
    if isinstance(value, KMExpansionResult):
        return format_km(value, fmt)
    if isinstance(value, PolySequence):
        return format_sequence(value, fmt)
    if isinstance(value, list):
        return format_matrix(value, fmt)
    raise TypeError(f"cannot print {type(value).__name__}")


# -- JSON ------------------------------------------------------------------

def poly_to_json(p: Poly) -> dict:
    return {"var": "x", "coeffs": [format_scalar(c) for c in p.coeffs]}


def poly_from_json(obj: dict) -> Poly:
    if obj.get("var", "x") != "x":
        raise ValueError("only polynomials in x are supported")
    return Poly(Fraction(c) for c in obj["coeffs"])


def to_json(value):
    """JSON-ready structure; key order is part of the output contract."""
    if isinstance(value, Poly):
        return poly_to_json(value)
    if isinstance(value, PolySequence):
        return {"polys": [poly_to_json(p) for p in value]}
    if isinstance(value, OperatorExpansionResult):
        return {"base": value.base.expr,
                "coeffs": [format_scalar(c) for c in value.coeffs],
                "order": value.order}
    if isinstance(value, KMExpansionResult):
        return {"coeffPolys": [poly_to_json(b) for b in value.coeffs],
                "order": value.order}
    if isinstance(value, list) and value and all(isinstance(r, list) for r in value):
        return {"rows": [[format_scalar(c) for c in row] for row in value]}
    if isinstance(value, (list, tuple)):
        return {"coeffs": [format_scalar(c) for c in value]}
    raise TypeError(f"cannot serialize {type(value).__name__}")


def emit_json(value) -> str:
    return json.dumps(to_json(value), separators=(",", ":"), ensure_ascii=False)
