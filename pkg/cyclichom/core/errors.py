"""Exception hierarchy shared by every module."""

from __future__ import annotations

from typing import Any, Optional, Sequence


class CyclicHomError(Exception):
    """Base class for all package errors."""


class FieldMismatchError(CyclicHomError):
    """Operands live over different scalar fields."""


class DimensionMismatchError(CyclicHomError):
    """Operand shapes are incompatible."""


class CompositionNonzeroError(CyclicHomError):
    """d_out composed with d_in is not the zero map."""


class TruncationError(CyclicHomError):
    """A bicomplex block required by a degree lies outside the layout."""


class GuardrailExceededError(CyclicHomError):
    """The requested computation exceeds the configured size cap."""

    def __init__(self, message: str, *, required: int, cap: int) -> None:
        super().__init__(message)
        self.required = required
        self.cap = cap


class ConstructionError(CyclicHomError):
    """Invalid construction spec or parameters."""


class AlgebraValidationError(CyclicHomError):
    """Structure constants violate associativity or the unit laws."""

    def __init__(self, message: str, report: Any = None) -> None:
        super().__init__(message)
        self.report = report


class AlgebraMismatchError(CyclicHomError):
    """Elements or chains over different algebras were combined."""


class NotACycleError(CyclicHomError):
    """A chain expected to be closed has a nonzero boundary."""


class IdempotentError(CyclicHomError):
    """A matrix offered as an idempotent does not satisfy e*e = e."""


class GeneratorError(CyclicHomError):
    """The canonical generator cannot be recognized in a homology group."""


class InputFormatError(CyclicHomError):
    """Malformed algebra, idempotent or expression input."""

    def __init__(self, message: str, locations: Optional[Sequence[str]] = None) -> None:
        self.locations = list(locations or [])
        if self.locations:
            message = f"{message} (at {', '.join(self.locations)})"
        super().__init__(message)


class NotInvertibleError(CyclicHomError):
    """A matrix over an algebra has no inverse."""
