"""Exception types shared across the package."""

from __future__ import annotations


class SkewhomError(Exception):
    """Base class for all package-specific errors."""


class BackendMismatchError(SkewhomError):
    """Scalars from incompatible backends (e.g. different discriminants) were mixed."""


class ZeroDivisorError(SkewhomError, ZeroDivisionError):
    """Inversion hit a zero divisor of a degenerate quadratic ring."""


class SingularMatrixError(SkewhomError):
    """A matrix inverse was requested for a singular matrix."""


class DimensionError(SkewhomError):
    """Operands have incompatible dimensions."""


class PreconditionError(SkewhomError):
    """A documented precondition of an operation does not hold."""


class ConstructionError(SkewhomError):
    """A builder's internal cross-check failed; the construction is inconsistent."""


class CounterexampleNotFoundError(SkewhomError):
    """An exhaustive counterexample scan came up empty where a failure was expected."""


class FileFormatError(SkewhomError):
    """A data file is malformed; ``location`` anchors the offending spot."""

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{message} ({location})" if location else message)
