"""Exception types shared across the library."""


class FfiwaError(Exception):
    """Base class; ``kind`` is the short label used in CLI error objects."""

    kind = "error"

    def __init__(self, message, offending=None):
        super().__init__(message)
        self.offending = offending


class DomainError(FfiwaError, ValueError):
    kind = "domain"


class PreconditionError(FfiwaError, ValueError):
    kind = "precondition"


class ReductionError(FfiwaError, ArithmeticError):
    """Reduced image of phi_T has tau-degree 0."""

    kind = "unstable-reduction"


class PrecisionError(FfiwaError, ArithmeticError):
    kind = "indeterminate-precision"


class InfiniteQuotientError(FfiwaError, ArithmeticError):
    kind = "infinite-quotient"


class NonConformingSequenceError(FfiwaError, ValueError):
    kind = "non-conforming-sequence"


class InvalidCountsError(FfiwaError, ValueError):
    kind = "invalid-counts"


class SizeError(FfiwaError, ValueError):
    kind = "size"


class ConsistencyError(FfiwaError, AssertionError):
    """Two independent computations of the same quantity disagree."""

    kind = "internal-consistency"


class ParseError(FfiwaError, ValueError):
    kind = "parse"
