"""Exceptions raised by the xshift library.

All errors derive from ValueError so callers that only expect bad input
values keep working.
"""


class XShiftError(ValueError):
    """Base class for all library errors."""


class ConfigurationError(XShiftError):
    """A configuration or task definition is inconsistent."""


class DimensionMismatchError(XShiftError):
    """Array shapes do not line up."""


class EmptyInputError(XShiftError):
    """An input that must hold data is empty or non-finite."""


class DegenerateInputError(XShiftError):
    """An input has too little variation for the requested computation."""


class FactorizationError(XShiftError):
    """A covariance matrix could not be Cholesky factorized."""


class SingularSystemError(XShiftError):
    """A least-squares design matrix is rank deficient.

    Attributes:
        condition_estimate (float): Estimated 2-norm condition number of the
            design matrix.
    """

    def __init__(self, message, condition_estimate):
        super().__init__(message)
        self.condition_estimate = condition_estimate


class ConditionalExpectationError(XShiftError):
    """A covariance sub-block needed for conditioning is singular."""


class CostGuardError(XShiftError):
    """Exact enumeration would be too expensive for the given dimension."""


class UndefinedMetricError(XShiftError):
    """A metric is undefined for the given data (e.g. TPR without positives)."""
