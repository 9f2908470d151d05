"""Exception types shared across the package."""


class MZetaError(Exception):
    """Base class for all errors raised by mzeta."""


class UsageError(MZetaError, ValueError):
    """Caller passed arguments that do not fit the operation (wrong ring, wrong weight, ...)."""


class DomainError(MZetaError, ArithmeticError):
    """The operation is undefined for this input (non-unit inversion, missing lambda data, ...)."""


class TruncationError(DomainError, IndexError):
    """A coefficient beyond the known truncation order of a series was requested."""
