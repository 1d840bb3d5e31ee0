"""Fundamental solutions of the time-fractional diffusion-wave equation.

The Cauchy problem (delta initial profile on the full line) and the
Signalling problem (delta boundary signal on the half line x >= 0) share a
single self-similar profile:

    G_c(x, t) = M_nu(r) / (2 sqrt(a) t^nu)
    G_s(x, t) = nu x M_nu(r) / (sqrt(a) t^(1+nu)),    r = |x| / (sqrt(a) t^nu)

with nu = beta/2.  Both are probability densities (in x and in t
respectively), linked by the reciprocity relation 2 nu x G_c = t G_s.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._gamma import gamma
from .errors import DistributionalLimit, InsufficientRange, InvalidDomain, InvalidParams
from .orders import FractionalOrder
from .special_fn import EvalPolicy, m_wright, m_wright_profile

__all__ = [
    "Kind",
    "GreenSpec",
    "SimilarityPoint",
    "similarity",
    "green_cauchy",
    "green_signalling",
    "green_cauchy_profile",
    "green_signalling_signal",
    "green_cauchy_transform",
    "green_signalling_transform",
    "green_cauchy_limit_nu0",
    "green_signalling_limit_nu0",
    "reciprocity_residual",
    "scale_map",
    "green_cauchy_moment",
    "signalling_tail_exponent",
]


class Kind(enum.Enum):
    CAUCHY = "cauchy"
    SIGNALLING = "signalling"


@dataclass(frozen=True)
class GreenSpec:
    """Problem selector: which fundamental solution, with which diffusivity.

    ``a`` has dimension L^2 T^(-beta); the Signalling domain is x >= 0."""

    kind: Kind
    a: float
    order: FractionalOrder

    def __post_init__(self):
        if not (isinstance(self.a, (int, float)) and math.isfinite(self.a) and self.a > 0):
            raise InvalidParams(f"diffusivity a must be finite and > 0, got {self.a}")
        object.__setattr__(self, "a", float(self.a))
        if not isinstance(self.order, FractionalOrder):
            raise InvalidParams("order must be a FractionalOrder")

    @property
    def nu(self) -> float:
        return self.order.nu

    @property
    def sqrt_a(self) -> float:
        return math.sqrt(self.a)


@dataclass(frozen=True)
class SimilarityPoint:
    """A space-time point together with its similarity coordinate
    r = |x| / (sqrt(a) t^nu)."""

    x: float
    t: float
    r: float


def similarity(spec: GreenSpec, x: float, t: float) -> SimilarityPoint:
    t = float(t)
    if not t > 0.0:
        raise InvalidDomain(f"similarity variable needs t > 0, got {t}")
    x = float(x)
    r = abs(x) / (spec.sqrt_a * t**spec.nu)
    return SimilarityPoint(x=x, t=t, r=r)


def _reject_nu1(spec: GreenSpec):
    if spec.nu == 1.0:
        c = spec.sqrt_a
        if spec.kind is Kind.CAUCHY:
            raise DistributionalLimit(
                "Cauchy Green function at nu=1 is a pair of impulses",
                description=f"(delta(x - {c}*t) + delta(x + {c}*t))/2",
            )
        raise DistributionalLimit(
            "Signalling Green function at nu=1 is a travelling impulse",
            description=f"delta(t - x/{c})",
        )


def green_cauchy(spec: GreenSpec, x: float, t: float,
                 policy: EvalPolicy | None = None) -> float:
    """G_c(x, t): response on the full line to a unit delta at x=0, t=0.

    Even in x; a probability density in x at every fixed t > 0."""
    if spec.kind is not Kind.CAUCHY:
        raise InvalidParams("spec.kind must be Cauchy")
    _reject_nu1(spec)
    pt = similarity(spec, x, t)
    return m_wright(spec.nu, pt.r, policy) / (2.0 * spec.sqrt_a * pt.t**spec.nu)


def green_signalling(spec: GreenSpec, x: float, t: float,
                     policy: EvalPolicy | None = None) -> float:
    """G_s(x, t): response at station x > 0 to a unit delta boundary signal.

    A probability density in t at every fixed x > 0."""
    if spec.kind is not Kind.SIGNALLING:
        raise InvalidParams("spec.kind must be Signalling")
    if not float(x) > 0.0:
        raise InvalidDomain(f"signalling station must have x > 0, got {x}")
    _reject_nu1(spec)
    pt = similarity(spec, x, t)
    nu = spec.nu
    return nu * pt.x * m_wright(nu, pt.r, policy) / (spec.sqrt_a * pt.t ** (1.0 + nu))


def green_cauchy_profile(spec: GreenSpec, x: np.ndarray, t: float,
                         policy: EvalPolicy | None = None) -> np.ndarray:
    """Vectorized G_c(x, t) over an x-grid at fixed t (plot/convolution sweeps)."""
    if spec.kind is not Kind.CAUCHY:
        raise InvalidParams("spec.kind must be Cauchy")
    _reject_nu1(spec)
    t = float(t)
    if not t > 0.0:
        raise InvalidDomain(f"needs t > 0, got {t}")
    scale = spec.sqrt_a * t**spec.nu
    r = np.abs(np.asarray(x, dtype=float)) / scale
    return m_wright_profile(spec.nu, r, policy) / (2.0 * scale)


def green_signalling_signal(spec: GreenSpec, x: float, t: np.ndarray,
                            policy: EvalPolicy | None = None) -> np.ndarray:
    """Vectorized G_s(x, t) over a t-grid at fixed station x > 0."""
    if spec.kind is not Kind.SIGNALLING:
        raise InvalidParams("spec.kind must be Signalling")
    x = float(x)
    if not x > 0.0:
        raise InvalidDomain(f"signalling station must have x > 0, got {x}")
    _reject_nu1(spec)
    t = np.asarray(t, dtype=float)
    if not (t > 0.0).all():
        raise InvalidDomain("signal grid needs t > 0 everywhere")
    nu = spec.nu
    r = x / (spec.sqrt_a * t**nu)
    return nu * x * m_wright_profile(nu, r, policy) / (spec.sqrt_a * t ** (1.0 + nu))


def green_cauchy_transform(spec: GreenSpec, x: float, s: float) -> float:
    """Laplace image (in t) of G_c: exp(-(|x|/sqrt(a)) s^nu) / (2 sqrt(a) s^(1-nu)).

    Real positive s only; complex continuation lives in laplace_oracle."""
    s = float(s)
    if not s > 0.0:
        raise InvalidDomain(f"transform evaluated for real s > 0, got {s}")
    nu = spec.nu
    return math.exp(-(abs(float(x)) / spec.sqrt_a) * s**nu) / (
        2.0 * spec.sqrt_a * s ** (1.0 - nu)
    )


def green_signalling_transform(spec: GreenSpec, x: float, s: float) -> float:
    """Laplace image (in t) of G_s: exp(-(x/sqrt(a)) s^nu), equal to 1 at x=0."""
    x = float(x)
    if x < 0.0:
        raise InvalidDomain(f"signalling transform needs x >= 0, got {x}")
    s = float(s)
    if not s > 0.0:
        raise InvalidDomain(f"transform evaluated for real s > 0, got {s}")
    return math.exp(-(x / spec.sqrt_a) * s**spec.nu)


def green_cauchy_limit_nu0(x) -> np.ndarray | float:
    """nu -> 0 limit of the Cauchy profile in similarity-scaled form: exp(-|x|)/2.

    The limit collapses the (a, t) dependence; we fix the scaling so that the
    profile is the unit-mass two-sided exponential in the similarity variable."""
    x = np.asarray(x, dtype=float)
    out = 0.5 * np.exp(-np.abs(x))
    return out if out.ndim else float(out)


def green_signalling_limit_nu0():
    """nu -> 0 limit of the Signalling response: an impulse at t = 0."""
    raise DistributionalLimit(
        "Signalling Green function at nu=0 degenerates to an impulse",
        description="delta(t)",
    )


def reciprocity_residual(spec_pair: tuple[GreenSpec, GreenSpec], x: float, t: float,
                         policy: EvalPolicy | None = None) -> float:
    """|2 nu x G_c(x,t) - t G_s(x,t)| for a matched (Cauchy, Signalling) pair.

    Both sides reduce to the auxiliary profile F_nu(r), so the residual is
    pure floating-point noise (contract: <= 1e-10 on the series branch)."""
    spec_c, spec_s = spec_pair
    if spec_c.kind is not Kind.CAUCHY or spec_s.kind is not Kind.SIGNALLING:
        raise InvalidParams("spec_pair must be (Cauchy spec, Signalling spec)")
    if spec_c.a != spec_s.a or spec_c.order != spec_s.order:
        raise InvalidParams("paired specs must share a and order")
    x = float(x)
    if not x > 0.0:
        raise InvalidDomain("reciprocity is stated on x > 0")
    lhs = 2.0 * spec_c.nu * x * green_cauchy(spec_c, x, t, policy)
    rhs = float(t) * green_signalling(spec_s, x, t, policy)
    return abs(lhs - rhs)


def scale_map(spec: GreenSpec, p: float, q: float, x: float, t: float,
              policy: EvalPolicy | None = None) -> tuple[float, float]:
    """Both sides of the space-time scaling identity, for testing.

    Cauchy:      G_c(p x, q t) = q^(-nu)  G_c(p x / q^nu, t)
    Signalling:  G_s(p x, q t) = q^(-1)   G_s(p x / q^nu, t)
    """
    p, q = float(p), float(q)
    if not (p > 0.0 and q > 0.0):
        raise InvalidParams("scale factors must be positive")
    nu = spec.nu
    if spec.kind is Kind.CAUCHY:
        lhs = green_cauchy(spec, p * x, q * t, policy)
        rhs = q ** (-nu) * green_cauchy(spec, p * x / q**nu, t, policy)
    else:
        lhs = green_signalling(spec, p * x, q * t, policy)
        rhs = q ** (-1.0) * green_signalling(spec, p * x / q**nu, t, policy)
    return lhs, rhs


def green_cauchy_moment(spec: GreenSpec, n: int, t: float) -> float:
    """Even spatial moment of G_c in closed form:

    integral x^(2n) G_c(x,t) dx = Gamma(2n+1)/Gamma(2 nu n + 1) (a t^(2 nu))^n."""
    n = int(n)
    if n < 1:
        raise InvalidParams("moment order n must be >= 1")
    t = float(t)
    if not t > 0.0:
        raise InvalidDomain(f"needs t > 0, got {t}")
    nu = spec.nu
    return gamma(2.0 * n + 1.0) / gamma(2.0 * nu * n + 1.0) * (spec.a * t ** (2.0 * nu)) ** n


def signalling_tail_exponent(spec: GreenSpec, x: float, t_lo: float, t_hi: float,
                             n_points: int = 25) -> float:
    """Least-squares slope of log G_s vs log t on a geometric grid in [t_lo, t_hi].

    For t large enough that r << 1 the decay is algebraic, slope -> -(1+nu).
    Requires at least two decades of t (t_hi/t_lo >= 100)."""
    t_lo, t_hi = float(t_lo), float(t_hi)
    if not (t_lo > 0.0 and t_hi > t_lo):
        raise InvalidDomain("need 0 < t_lo < t_hi")
    if t_hi / t_lo < 100.0:
        raise InsufficientRange(
            f"tail fit needs t_hi/t_lo >= 100, got {t_hi / t_lo:.3g}"
        )
    t = np.geomspace(t_lo, t_hi, int(n_points))
    g = green_signalling_signal(spec, x, t)
    if not (g > 0.0).all():
        raise InsufficientRange("G_s underflowed on the fit window; shrink the range")
    slope = np.polyfit(np.log(t), np.log(g), 1)[0]
    return float(slope)
