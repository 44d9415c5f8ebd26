"""Exception types shared across the package."""


class KrullkitError(Exception):
    """Base class for all krullkit errors."""


class RingUsageError(KrullkitError):
    """An element was passed to a ring it does not belong to."""


class UnsupportedRing(KrullkitError):
    """The requested procedure is not available for this ring kind."""


class UndefinedIndex(KrullkitError):
    """The enumeration is undefined at the queried index."""


class PreconditionViolated(KrullkitError):
    """A documented precondition of an operation does not hold."""


class BoundExceeded(KrullkitError):
    """An input exceeds the configured desk-scale budget."""


class DivisionByZeroPoly(KrullkitError):
    """Polynomial division by the zero polynomial."""


class WitnessError(KrullkitError):
    """A membership witness failed its recombination check."""


class SpecParseError(KrullkitError):
    """A ring/enumeration/polynomial spec string could not be parsed."""
