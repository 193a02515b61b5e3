"""Exception hierarchy shared across the package."""

from __future__ import annotations


class RankOneError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class TooLargeError(RankOneError):
    """Input exceeds a documented size guardrail."""

    code = "too-large"


class NotZeroConsistentError(RankOneError):
    """Some zero entry is not covered by an all-zero maximal slice."""

    code = "not-zero-consistent"


class ZeroPolynomialError(RankOneError):
    code = "zero-polynomial"


class NotMonicError(RankOneError):
    code = "not-monic"


class NotInClosureError(RankOneError):
    """Requested entry is not finitely determined by the observed ones."""

    code = "not-in-closure"


class NotCompletableError(RankOneError):
    code = "not-completable"


class NotComplexCompletableError(NotCompletableError):
    code = "not-complex-completable"


class NotRealCompletableError(NotCompletableError):
    code = "not-real-completable"


class CosetTooLargeError(RankOneError):
    """The sign coset has too many elements to enumerate."""

    code = "coset-too-large"


class DegenerateIndexSetError(RankOneError):
    """The observed index set does not admit the boundary-factor analysis."""

    code = "degenerate-index-set"


class CapExceededError(RankOneError):
    """Requested expansion exceeds the documented cap."""

    code = "cap-exceeded"


class NegativeInputError(RankOneError):
    code = "negative-input"


class InternalConsistencyError(RankOneError):
    """An internal identity failed.  Indicates a bug, never bad input."""

    code = "internal-consistency"


class NonRationalCoefficientError(InternalConsistencyError):
    code = "non-rational-coefficient"


class NonDivisibleExponentError(InternalConsistencyError):
    code = "non-divisible-exponent"


class InputError(RankOneError):
    """Malformed user input (documents or CLI arguments)."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
