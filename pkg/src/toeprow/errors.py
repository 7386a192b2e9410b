"""Domain errors raised by the library.

Every error carries a short machine-readable ``code`` so the HTTP layer and
the CLI can report failures uniformly.
"""


class DomainError(Exception):
    """Base class for all domain-rule violations."""

    code = "domain_error"


class OutOfRangeError(DomainError):
    code = "out_of_range"


class OverlapError(DomainError):
    code = "overlap"


class BothEmptyError(DomainError):
    code = "both_empty"


class DuplicateError(DomainError):
    code = "duplicate"


class IndexOutOfRangeError(DomainError):
    code = "index_out_of_range"


class PreconditionViolatedError(DomainError):
    code = "precondition_violated"


class NotAWalkError(DomainError):
    code = "not_a_walk"


class TooSmallError(DomainError):
    code = "too_small"


class UnsupportedError(DomainError):
    code = "unsupported"


class InvalidRangeError(DomainError):
    code = "invalid_range"


class UnknownTheoremError(DomainError):
    code = "unknown_theorem"


class UnknownPredicateError(DomainError):
    code = "unknown_predicate"


class EngineMismatchError(DomainError):
    code = "engine_mismatch"
