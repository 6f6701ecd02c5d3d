"""Exception hierarchy shared by all swanform modules."""


class SwanformError(Exception):
    """Base class for all library errors."""


class ContextMismatchError(SwanformError):
    """Two values from incompatible field/series contexts were combined."""


class PrecisionError(SwanformError):
    """A result is not determined by the coefficients known at the
    current horizon.  Carries no partial answer; callers that can make
    progress with partial data catch this and degrade explicitly."""


class PreconditionError(SwanformError):
    """An operation's stated precondition was violated (e.g. inverting a
    zero series, or running the two-dimensional reduction with conductor
    >= p)."""


class ParseError(SwanformError):
    """Syntax error in CLI/service input, annotated with a position."""

    def __init__(self, message, position, expected=()):
        super().__init__(message)
        self.position = position
        self.expected = tuple(expected)
