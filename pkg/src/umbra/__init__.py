"""Exact umbral calculus: operators on polynomials, expansion theorems and
polynomial sequences of binomial type, over the rationals."""
from .errors import InputError, PreconditionError, UmbraError
from .factorial import (
    CLASSICAL,
    FactorialSystem,
    factorial_of,
    gen_binomial,
    make_factorial_system,
)
from .operators import (
    ExplicitAction,
    KMExpansionResult,
    Operator,
    OperatorExpansionResult,
    ShiftInvariant,
    apply_operator,
    catalog_operator,
    classify,
    identity,
    km_expansion,
    make_explicit,
    make_shift_invariant,
    operator_algebra,
    operator_expansion,
    operators_agree,
)
from .parser import (
    ExprTree,
    elaborate,
    operator_from_text,
    parse_operator_expr,
    parse_polynomial,
)
from .poly import Poly, falling_factorial, poly_arith
from .printing import emit_json, print_expr
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
from .series import DEFAULT_ORDER, TruncSeries, series_arith, series_exp_log

__version__ = "0.1.0"
