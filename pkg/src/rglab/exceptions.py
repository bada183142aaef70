"""
Exception hierarchy for the random graph laboratory.

Every error raised by ``rglab`` derives from :class:`RgLabError`, so callers
can catch the whole family in one clause. Subclasses carry the structured
context a caller needs to react (the offending field, the configured cap,
the stream position) in keyword-only attributes.
"""

from __future__ import annotations

from typing import Any


class RgLabError(Exception):
    """Base exception for all laboratory failures."""

    def __init__(self, message: str, *, details: dict[str, Any] | None = None) -> None:  # noqa: D401
        super().__init__(message)
        self.message = message
        self.details = details or {}


class InvalidInputError(RgLabError):
    """Raised when an argument violates an operation's precondition.

    Parameters
    ----------
    message : str
        Human readable description.
    field : str, optional
        Name of the offending argument.
    value : Any, optional
        The rejected value (kept small: a vertex, a probability, a pair).
    details : dict, optional
        Extra context.

    Examples
    --------
    >>> raise InvalidInputError("p must lie in [0, 1]", field="p", value=1.5)
    Traceback (most recent call last):
    ...
    rglab.exceptions.InvalidInputError: p must lie in [0, 1]
    """

    def __init__(
        self,
        message: str,
        *,
        field: str | None = None,
        value: Any | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message, details=details)
        self.field = field
        self.value = value


class InvalidRotationError(InvalidInputError):
    """Raised when a rotation needs a chord the host graph does not have."""

    def __init__(self, message: str, *, pivot: int, endpoint: int) -> None:
        super().__init__(message, field="pivot", value=pivot)
        self.pivot = pivot
        self.endpoint = endpoint


class CapacityError(RgLabError):
    """Raised when an exact (exponential) oracle is asked beyond its cap."""

    def __init__(self, message: str, *, operation: str, n: int, cap: int) -> None:
        super().__init__(message, details={"operation": operation, "n": n, "cap": cap})
        self.operation = operation
        self.n = n
        self.cap = cap


class StreamUnderflowError(RgLabError):
    """Raised when a finite Bernoulli stream is read past its end."""

    def __init__(self, message: str, *, position: int, length: int) -> None:
        super().__init__(message)
        self.position = position
        self.length = length


class NoHittingTimeError(RgLabError):
    """Raised when a monotone property fails even on the complete graph."""

    def __init__(self, message: str, *, property_name: str) -> None:
        super().__init__(message)
        self.property_name = property_name


class InvariantViolationError(RgLabError):
    """Raised in checked mode when a trace or witness fails re-validation."""

    def __init__(self, message: str, *, violations: list[str]) -> None:
        super().__init__(message, details={"violations": violations[:20]})
        self.violations = violations
