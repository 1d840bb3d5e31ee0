"""Exception and warning types shared across the package."""


class FdwaveError(Exception):
    """Base class for all package errors."""


class InvalidParams(FdwaveError, ValueError):
    """Parameters violate a documented precondition or admissible region."""


class InvalidDomain(FdwaveError, ValueError):
    """Evaluation point outside the operation's domain (e.g. t <= 0)."""


class OutOfRange(FdwaveError, ValueError):
    """Scalar parameter outside its allowed interval."""


class NonConvergent(FdwaveError, ArithmeticError):
    """Series or quadrature failed to reach the requested tolerance."""


class NonConvergentTransform(NonConvergent):
    """Numeric Laplace transform failed to converge on the sample horizon."""


class DistributionalLimit(FdwaveError, ValueError):
    """The requested object is a distribution (delta), not point-evaluable.

    ``description`` carries the analytic form, e.g. the impulse location.
    """

    def __init__(self, message: str, description: str = ""):
        super().__init__(message)
        self.description = description or message


class Degenerate(FdwaveError, ValueError):
    """Asymptotic branch rejected: the saddle point is too wide to trust."""


class AlphaOne(FdwaveError, ValueError):
    """alpha = 1 must be handled by the closed-form Cauchy-Lorentz branch."""


class OffGrid(FdwaveError, ValueError):
    """Requested time is not a node of the uniform sample grid."""


class InsufficientResolution(FdwaveError, ValueError):
    """Too few samples before the evaluation point for the difference stencil."""


class InsufficientRange(FdwaveError, ValueError):
    """Fit window too short (t_hi/t_lo below the documented minimum)."""


class Unstable(FdwaveError, ArithmeticError):
    """Scheme or inversion produced estimates that disagree beyond tolerance."""


class UnknownFigure(FdwaveError, ValueError):
    """Figure name not in the documented set."""


class DomainTruncation(UserWarning):
    """Data or solution mass at the truncated domain edge is not negligible."""


class UnknownFigure(FdwaveError, ValueError):
    """Figure name not in the supported set."""


class DomainTruncation(UserWarning):
    """Mass near the truncated grid edge exceeds the accounting threshold."""
