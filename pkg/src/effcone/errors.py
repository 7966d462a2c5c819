"""Exception types shared across the package."""


class EffconeError(Exception):
    """Base class for all errors raised by this package."""


class ZeroRay(EffconeError, ValueError):
    pass


class DimensionMismatch(EffconeError, ValueError):
    pass


class BasisMismatch(EffconeError, ValueError):
    pass


class NotActionClosed(EffconeError):
    """A group element maps some ray outside the given set."""


class NotUnimodular(EffconeError, ValueError):
    pass


class BadLabel(EffconeError, ValueError):
    pass


class SpanFailure(EffconeError):
    pass


class TableInconsistent(EffconeError):
    pass


class PushforwardMismatch(EffconeError):
    pass


class BadConfiguration(EffconeError, ValueError):
    pass


class ConeFormatError(EffconeError, ValueError):
    """Malformed cone text file; ``lineno`` points at the offending line."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
