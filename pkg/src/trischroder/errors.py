"""Exception types. Class names double as the error names printed by the CLI."""

from __future__ import annotations


class TriSchError(Exception):
    """Base class for every error raised by the package."""

    #: CLI exit code: 1 for bad input, 2 for a failed mathematical check.
    exit_code = 1

    @property
    def name(self) -> str:
        return type(self).__name__

    def __str__(self) -> str:
        msg = super().__str__()
        return f"{self.name}: {msg}" if msg else self.name


class InputError(TriSchError):
    exit_code = 1


class VerificationError(TriSchError):
    exit_code = 2


class ParseError(InputError, ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


class NotCoprime(InputError):
    pass


class EllOutOfRange(InputError):
    pass


class NotInvariant(InputError):
    def __init__(self, message: str, gap: int | None = None):
        self.gap = gap
        super().__init__(message)


class DomainError(InputError):
    pass


class NonKnotInput(InputError):
    pass


class SlopeTooShallow(InputError):
    def __init__(self, message: str, suggestion=None):
        self.suggestion = suggestion
        super().__init__(message)


class StrandBound(InputError):
    pass


class NoBezoutInRange(InputError):
    pass


class InternalMismatch(VerificationError):
    pass


class CycleDetected(VerificationError):
    pass


class RouteMismatch(VerificationError):
    def __init__(self, message: str, results: dict | None = None):
        self.results = results or {}
        super().__init__(message)


class InvarianceViolation(VerificationError):
    def __init__(self, message: str, results: dict | None = None):
        self.results = results or {}
        super().__init__(message)
