"""
Error hierarchy for Ellisflux
Every engine failure derives from EllisfluxError so the orchestrator can
turn it into a structured result.
"""

from typing import Optional


class EllisfluxError(Exception):
    """Base class for all engine errors"""


class DomainError(EllisfluxError, ArithmeticError):
    """Division by zero or inverse of zero"""


class ValuationOfZeroError(DomainError):
    """Valuation requested for a certified-zero element"""


class NotInValuationRingError(DomainError):
    """Operation needs a non-negative valuation"""


class PrecisionHorizonError(EllisfluxError):
    """A leading term or an equality could not be certified within the horizon"""

    def __init__(self, subcomputation: str, message: Optional[str] = None):
        self.subcomputation = subcomputation
        super().__init__(message or f"precision horizon exhausted in {subcomputation}")


class InexactOperationError(EllisfluxError):
    """An operation needs an exact normal form that a lazy operand cannot supply"""


class PreconditionError(EllisfluxError, ValueError):
    """Input violates the documented precondition of an operation"""


class LevelExhaustedError(EllisfluxError):
    """No fresh level (or transcendental) left; increase --levels"""


class ClassificationError(EllisfluxError):
    """A realization could not be read back as a type"""


class ParseError(EllisfluxError, ValueError):
    """Syntax or semantic error in user input"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
