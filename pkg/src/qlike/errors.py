"""Exception hierarchy shared by all modules."""


class QlikeError(Exception):
    """Base class for package errors."""


class InvalidInput(QlikeError):
    """The supplied data violates a documented precondition (CLI exit 2)."""


class InternalError(QlikeError):
    """An invariant the mathematics guarantees failed: a bug, not bad input
    (CLI exit 3)."""
