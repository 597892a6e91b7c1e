"""Exception hierarchy shared across the package."""


class VolterraError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(VolterraError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class BranchCutError(DomainError):
    """A complex argument falls on the active branch cut."""


class SingularityError(DomainError):
    """Evaluation was requested at a non-removable singularity."""


class QuadratureError(VolterraError):
    """Base class for numerical-integration failures."""


class ToleranceNotMet(QuadratureError):
    """The integrator exhausted its budget before reaching tolerance.

    Carries the best estimate obtained so far in ``result``.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class NoDecayDetected(QuadratureError):
    """A semi-infinite integrand's tail refused to fall below threshold."""


class NonFiniteIntegrand(QuadratureError):
    """The integrand returned NaN or infinity inside the interval."""


class ToleranceUnachievable(VolterraError):
    """The requested accuracy cannot be reached in double precision.

    Raised by the Laplace-inversion contour builder when the exponential
    amplification e^{sigma*t} magnifies round-off past the target.
    """
