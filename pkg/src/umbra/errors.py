"""Exception hierarchy.

Two families matter to callers: :class:`InputError` (bad text or bad names,
the caller typed something wrong) and :class:`PreconditionError` (the input
is well formed but the mathematics does not allow the request).  The CLI maps
them to exit codes 2 and 3.
"""
from __future__ import annotations


class UmbraError(Exception):
    """Base class for every error raised by this package."""

    @property
    def kind(self) -> str:
        return type(self).__name__


class InputError(UmbraError):
    pass


class PreconditionError(UmbraError, ValueError):
    pass


# -- input errors ----------------------------------------------------------

class ExprSyntaxError(InputError):
    """Malformed expression text.  ``offset`` is a byte offset into the input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class UnboundName(InputError):
    def __init__(self, name: str, offset: int | None = None):
        where = "" if offset is None else f" (at byte {offset})"
        super().__init__(f"unbound name {name!r}{where}")
        self.name = name
        self.offset = offset


class NonPolynomial(InputError):
    pass


class UnknownOperator(InputError):
    pass


class MissingParam(InputError):
    pass


# -- precondition errors ---------------------------------------------------

class DivisionByHigherValuation(PreconditionError):
    pass


class NonzeroConstantTerm(PreconditionError):
    pass


class ConstantTermNotOne(PreconditionError):
    pass


class NotReversible(PreconditionError):
    pass


class ZeroFactorIllegal(PreconditionError):
    pass


class OutOfRange(PreconditionError):
    pass


class InsufficientOrder(PreconditionError):
    pass


class NotInvertible(PreconditionError):
    pass


class NotDelta(PreconditionError):
    pass


class NotShiftInvariant(PreconditionError):
    pass


class FractionalPowerNeedsUnitConstant(PreconditionError):
    pass


class MixedFactorialSystems(PreconditionError):
    pass


class NonClassicalFactorial(PreconditionError):
    pass


class NotTriangular(PreconditionError):
    pass


class LengthMismatch(PreconditionError):
    pass
