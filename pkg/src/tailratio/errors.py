"""Exception hierarchy shared by all tailratio modules."""


class TailRatioError(Exception):
    """Base class for all library errors."""


class ParameterDomainError(TailRatioError, ValueError):
    """A numeric argument lies outside its documented domain."""


class CapabilityError(TailRatioError):
    """A family lacks the analytic capability an operation requires."""


class InsufficientDataError(TailRatioError, ValueError):
    """The input sequence is too short for the requested operation."""


class SingularityError(TailRatioError, ZeroDivisionError):
    """A density evaluated to zero where a ratio needs it positive."""


class AccuracyError(TailRatioError):
    """Quadrature failed to reach the requested tolerance.

    Carries the best available estimate so callers can inspect it.
    """

    def __init__(self, message, best_estimate=None, error_estimate=None):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate


class DegenerateFrequencyError(TailRatioError):
    """The observed event frequency is 0 or 1, so ln(p_hat) is unusable.

    Carries the one-sided bound obtainable from the Wilson interval:
    ``bound_side`` is "upper" when every block triggered the event
    (alpha is bounded above) and "lower" when no block did.
    """

    def __init__(self, message, p_hat, bound, bound_side, confidence):
        super().__init__(message)
        self.p_hat = p_hat
        self.bound = bound
        self.bound_side = bound_side
        self.confidence = confidence
