"""Exception types shared across the library."""


class HypergonError(Exception):
    """Base class for all library-specific errors."""


class DomainError(HypergonError, ValueError):
    """An argument violated a documented precondition."""


class SingularInputError(DomainError):
    """A geometric operation is undefined for the given input."""


class DepthLimitError(HypergonError):
    """A growth request would exceed the configured boundary-side cap."""


class PrecisionError(HypergonError):
    """Double precision can no longer separate the vertices involved."""


class UnknownSuiteError(DomainError):
    """The requested property-suite id does not exist."""


class ConvergenceError(HypergonError):
    """Iterative refinement hit its iteration cap.

    Carries the best point and value seen so far in ``best_point`` /
    ``best_value``.
    """

    def __init__(self, message, best_point=None, best_value=None):
        super().__init__(message)
        self.best_point = best_point
        self.best_value = best_value
