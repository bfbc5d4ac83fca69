"""Exception hierarchy shared by every module."""


class BFCError(Exception):
    """Base class for all library errors."""


class ZeroFunction(BFCError):
    """Raised when an operation needs a non-zero Boolean function."""


class EmptyFamily(BFCError):
    """Raised when an operation needs a non-empty set family."""


class DimensionCap(BFCError):
    """Raised when n exceeds the cap configured for an operation."""


class PreconditionViolated(BFCError):
    """Raised when an input fails a documented precondition."""


class WitnessNotFound(BFCError):
    """A witness guaranteed to exist by a theorem was not found.

    This never fires on correct code; it signals an internal inconsistency.
    """


class InvalidSpec(BFCError):
    """Raised for malformed constructor specifications (e.g. subcubes)."""


class FormatError(BFCError):
    """Raised when a truth-table or support file cannot be parsed."""
