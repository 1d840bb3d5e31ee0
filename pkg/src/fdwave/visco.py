"""Power-law viscoelastic materials and their fractional-equation parameters.

A medium whose creep compliance grows like t^gamma (0 <= gamma <= 1)
propagates disturbances according to the time-fractional equation of order
beta = 2 - gamma: gamma = 1 is a Newtonian fluid (diffusion), gamma = 0 a
perfectly elastic solid (waves).  In between, the internal-friction quality
factor is frequency independent, Q^-1 = tan(gamma*pi/2), which makes gamma
directly measurable from attenuation data.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from ._gamma import gamma as gamma_fn
from .errors import InvalidParams, OutOfRange
from .green import GreenSpec, Kind
from .orders import FractionalOrder

__all__ = [
    "MaterialParams",
    "creep_compliance",
    "order_from_creep",
    "q_factor",
    "gamma_from_q",
    "mu_of_s",
    "green_spec",
]


@dataclass(frozen=True)
class MaterialParams:
    """Density rho (M L^-3), coefficient a (L^2 T^(gamma-2)), creep exponent."""

    rho: float
    a: float
    gamma: float

    def __post_init__(self) -> None:
        rho, a, g = float(self.rho), float(self.a), float(self.gamma)
        if not (rho > 0.0 and math.isfinite(rho)):
            raise InvalidParams(f"rho must be positive, got {self.rho}")
        if not (a > 0.0 and math.isfinite(a)):
            raise InvalidParams(f"a must be positive, got {self.a}")
        if not 0.0 <= g <= 1.0:
            raise OutOfRange(f"gamma must be in [0, 1], got {self.gamma}")
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "gamma", g)

    @property
    def order(self) -> FractionalOrder:
        return FractionalOrder.from_gamma(self.gamma)


def creep_compliance(m: MaterialParams, t: float) -> float:
    """J(t) = (1/(rho*a)) * t^gamma / Gamma(gamma + 1), monotone in t.

    gamma = 1 is Newtonian flow J = t/(rho*a); gamma = 0 the constant
    compliance J0 = 1/(rho*a) of a perfectly elastic solid.
    """
    t = float(t)
    if not (t > 0.0 and math.isfinite(t)):
        raise InvalidParams(f"t must be positive, got {t}")
    return t**m.gamma / (m.rho * m.a * gamma_fn(m.gamma + 1.0))


def order_from_creep(gamma: float) -> FractionalOrder:
    """Equation order from the creep exponent: beta = 2 - gamma in [1, 2]."""
    return FractionalOrder.from_gamma(float(gamma))


def q_factor(gamma: float) -> float:
    """Frequency-independent internal friction Q^-1 = tan(gamma*pi/2).

    Defined for 0 < gamma < 1.  The endpoints are the lossless and the
    fully dissipative limits; they raise OutOfRange carrying the limiting
    value (0 and +inf) in the error's ``limit`` attribute.
    """
    gamma = float(gamma)
    if not 0.0 < gamma < 1.0:
        if gamma == 0.0:
            err = OutOfRange("gamma=0 is the lossless elastic limit, Q^-1 -> 0")
            err.limit = 0.0
            raise err
        if gamma == 1.0:
            err = OutOfRange("gamma=1 is the fully dissipative limit, Q^-1 -> +inf")
            err.limit = math.inf
            raise err
        raise OutOfRange(f"gamma must be in (0, 1), got {gamma}")
    return math.tan(0.5 * math.pi * gamma)


def gamma_from_q(q_inv: float) -> float:
    """Invert the friction law: gamma = (2/pi) * arctan(Q^-1), Q^-1 > 0."""
    q_inv = float(q_inv)
    if not (q_inv > 0.0):
        raise OutOfRange(f"Q^-1 must be positive, got {q_inv}")
    return (2.0 / math.pi) * math.atan(q_inv)


def mu_of_s(m: MaterialParams, s: float) -> float:
    """Laplace-domain spatial rate mu(s) = sqrt(s^(2-gamma)/a), real for s > 0.

    gamma = 1 gives the diffusion rate sqrt(s/a); gamma = 0 gives s/c with
    wave-front velocity c = sqrt(a).
    """
    s = float(s)
    if not (s > 0.0 and math.isfinite(s)):
        raise InvalidParams(f"s must be positive, got {s}")
    return math.sqrt(s ** (2.0 - m.gamma) / m.a)


def green_spec(m: MaterialParams, kind: Kind) -> GreenSpec:
    """Green-function description of the medium: same a, order beta = 2 - gamma."""
    return GreenSpec(kind=kind, a=m.a, order=m.order)
