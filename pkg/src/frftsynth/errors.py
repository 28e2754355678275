"""Exception types raised by frftsynth."""


class InvalidArgumentError(ValueError):
    pass


class SingularOrderError(InvalidArgumentError):
    """Order too close to 0 or 2 for the integral kernel; use ``frft`` instead."""


class SingularMatrixError(InvalidArgumentError):
    pass


class ResourceLimitError(RuntimeError):
    pass


class WavFormatError(ValueError):
    pass


class DataError(ValueError):
    """Signal content that must never be written (NaN/Inf)."""


class UsageError(Exception):
    """Bad command-line or configuration input."""
