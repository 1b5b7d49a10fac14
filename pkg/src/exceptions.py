"""
Exception hierarchy for qsuspend.

Every error raised on purpose by the package derives from QSuspendError, and most
also derive from the matching builtin (ValueError, ArithmeticError, RuntimeError)
so callers that only know the builtin still catch them.

Usage:
    from src.exceptions import NotDivisibleError

    try:
        r = laurent_div_one_minus_q(p)
    except NotDivisibleError as e:
        logger.error(f"No semiclassical limit: {e}")
"""

from typing import Optional


class QSuspendError(Exception):
    """Base class for all qsuspend errors."""


class ScalarDomainError(QSuspendError, ValueError):
    """Evaluation of a Laurent polynomial outside its domain (q0 = 0 with negative powers)."""


class NotDivisibleError(QSuspendError, ArithmeticError):
    """A Laurent polynomial is not exactly divisible by (1 - q)."""


class PresetMismatchError(QSuspendError, ValueError):
    """Unknown generator, index out of range, or operands over different presets."""


class ExpressionSyntaxError(QSuspendError, ValueError):
    """
    Syntax error while parsing an expression.

    Attributes:
        position: 0-based character offset where parsing failed (None if unknown)
    """

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class TruncationOverflowError(QSuspendError, ValueError):
    """A Fock-space computation would leave the truncated space."""


class OffSphereError(QSuspendError, ValueError):
    """A classical point does not satisfy sum |a_i|^2 = t (1 - t)."""


class IndexViolationError(QSuspendError, ValueError):
    """Indices k, l outside the range allowed by the projector tower."""


class RewriteBudgetExceeded(QSuspendError, RuntimeError):
    """A reduction took more rewrite steps than the termination order allows."""
