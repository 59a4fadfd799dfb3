"""Exception hierarchy.

Everything numeric raises a subclass of CZetaError so callers can catch one
type at the harness boundary and turn it into a failed report instead of a
crashed suite.
"""


class CZetaError(Exception):
    pass


class PoleError(CZetaError):
    """A denominator (or a cot/csc factor) vanishes for some admissible index."""


class DivergenceError(CZetaError):
    """The requested series does not converge (e.g. trailing (k, x) = (1, 1))."""


class AdmissibilityError(CZetaError):
    """An identity case violates the preconditions of its identity."""


class GenerationError(CZetaError):
    """Random case generation could not satisfy the constraints."""


class ConfigError(CZetaError):
    """Malformed configuration (suite file, CLI parameters, eval config)."""


class InternalConsistencyError(CZetaError):
    """Two independent evaluation routes disagree beyond their combined error.

    This is a bug indicator, never an input problem: it means the paired-series
    value and its closed-form cross-check went separate ways.
    """


class PrecisionNotMetError(CZetaError):
    """Evaluation finished but the error estimate exceeds the requested target.

    Carries the best value obtained and the achieved error bound so callers
    that can live with less precision may still use the result.
    """

    def __init__(self, message, value, err):
        super().__init__(message)
        self.value = value
        self.err = err
