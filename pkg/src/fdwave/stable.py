"""Levy stable probability densities on the Feller-Takayasu diamond.

Covered representations: the three classical closed forms (Gauss,
Cauchy-Lorentz, Levy-Smirnov), convergent power series for 0 < alpha < 1
and 1 < alpha < 2, the alpha <-> 1/alpha duality, and the extremal-density
identities through the M-Wright function.  General (alpha, theta) points
outside these routes are out of scope by design — there is deliberately no
characteristic-function integrator here.

Parameterization: index alpha in (0, 2], skewness theta with
|theta| <= min(alpha, 2 - alpha).  Reflection: p(-y; -theta) = p(y; theta).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._gamma import gammaln_pos
from .errors import AlphaOne, InvalidDomain, InvalidParams, NonConvergent
from .green import GreenSpec, Kind, green_cauchy, green_signalling
from .orders import FractionalOrder
from .special_fn import EvalPolicy, m_wright, m_wright_arr

__all__ = [
    "StableParams",
    "ClosedKind",
    "LEVY_SMIRNOV_MEDIAN_FACTOR",
    "stable_pdf_series",
    "stable_pdf_closed",
    "stable_cdf_closed",
    "stable_from_mwright",
    "stable_duality_residual",
    "signalling_as_stable_residual",
    "stable_extremal_survival",
    "stable_tail_exponent",
]

_EPS = float(np.finfo(float).eps)
# relative cancellation budget: series values are certified or refused
_CANCEL_REL = 2e-8
_RUN = 8

# median of the Levy-Smirnov law is mu times this (root of erfc(1/sqrt(2 t)) = 1/2)
LEVY_SMIRNOV_MEDIAN_FACTOR = 2.198109338317732


@dataclass(frozen=True)
class StableParams:
    """Index/skewness pair restricted to |theta| <= min(alpha, 2 - alpha).

    The boundary is admissible (extremal densities live there); alpha = 2
    forces theta = 0 (the Gaussian apex of the diamond)."""

    alpha: float
    theta: float

    def __post_init__(self):
        a, th = float(self.alpha), float(self.theta)
        if not (math.isfinite(a) and 0.0 < a <= 2.0):
            raise InvalidParams(f"alpha must be in (0, 2], got {self.alpha}")
        if not math.isfinite(th):
            raise InvalidParams(f"theta must be finite, got {self.theta}")
        bound = min(a, 2.0 - a)
        if abs(th) > bound:
            raise InvalidParams(
                f"(alpha, theta) = ({a}, {th}) outside |theta| <= min(alpha, 2-alpha) = {bound}"
            )
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "theta", th)

    def reflected(self) -> "StableParams":
        """Parameters of the mirrored density: p(-y; reflected) = p(y; self)."""
        return StableParams(self.alpha, -self.theta)


def _certified_series(c: float, g: float, phi: float, tol: float, max_terms: int) -> float:
    """sum_{n>=1} g^n Gamma(c n + 1)/n! sin(n phi), refused when roundoff
    cancellation would exceed the certification budget."""
    total = 0.0
    comp = 0.0
    abs_sum = 0.0
    run = 0
    if g == 0.0:
        return 0.0
    ln_ag = math.log(abs(g))
    neg = g < 0.0
    for n in range(1, max_terms + 1):
        ln_mag = gammaln_pos(c * n + 1.0) - gammaln_pos(n + 1.0) + n * ln_ag
        if ln_mag > 700.0:
            raise NonConvergent("series term overflow: argument outside summable range")
        mag = math.exp(ln_mag)
        term = -mag if (neg and n % 2 == 1) else mag
        term *= math.sin(n * phi)
        y = term - comp
        t_new = total + y
        comp = (t_new - total) - y
        total = t_new
        abs_sum += abs(term)
        if abs(term) <= tol * max(abs(total), 1e-300):
            run += 1
            if run >= _RUN and n >= 12:
                break
        else:
            run = 0
    else:
        raise NonConvergent(f"series did not settle within {max_terms} terms")
    noise = _EPS * abs_sum
    if noise > max(1e-13, _CANCEL_REL * abs(total)):
        raise NonConvergent(
            f"cancellation beyond certification: noise {noise:.2e} vs value {total:.2e}"
        )
    return total


def stable_pdf_series(p: StableParams, y: float, policy: EvalPolicy | None = None) -> float:
    """p_alpha(y; theta) for y > 0 by the convergent power series.

    Descending powers of y for 0 < alpha < 1, ascending for 1 < alpha < 2.
    For y < 0 use the reflection p(-y; -theta) = p(y; theta).  Values whose
    cancellation cannot be certified raise NonConvergent instead of lying."""
    y = float(y)
    if not y > 0.0:
        raise InvalidDomain(f"series route needs y > 0, got {y}")
    a, th = p.alpha, p.theta
    if a == 1.0:
        raise AlphaOne("alpha = 1: use stable_pdf_closed CauchyLorentz (theta = 0)")
    if a == 2.0:
        raise InvalidParams("alpha = 2: use stable_pdf_closed Gauss (sigma^2 = 2)")
    policy = policy or EvalPolicy()
    if a < 1.0:
        val = _certified_series(
            a, -(y**-a), 0.5 * math.pi * (th - a), policy.series_tol, policy.max_terms
        )
    else:
        val = _certified_series(
            1.0 / a, -y, 0.5 * math.pi * (th - a) / a, policy.series_tol, policy.max_terms
        )
    out = val / (math.pi * y)
    if out < 0.0:
        # certified sums can still land an ulp below zero where p ~ 0
        if -out <= 1e-13 / y:
            return 0.0
        raise NonConvergent(f"series produced negative density {out} at y={y}")
    return out


class ClosedKind(enum.Enum):
    GAUSS = "gauss"
    CAUCHY_LORENTZ = "cauchy-lorentz"
    LEVY_SMIRNOV = "levy-smirnov"


def _check_closed(kind: ClosedKind, scale: float, y: float):
    scale = float(scale)
    if not (math.isfinite(scale) and scale > 0.0):
        raise InvalidParams(f"scale must be > 0, got {scale}")
    y = float(y)
    if kind is ClosedKind.LEVY_SMIRNOV and y <= 0.0:
        raise InvalidDomain("Levy-Smirnov law is supported on y > 0")
    return scale, y


def stable_pdf_closed(kind: ClosedKind, scale: float, y: float) -> float:
    """The named closed-form density.

    Gauss: scale = sigma (standard deviation).  Cauchy-Lorentz: scale =
    half-width lambda.  Levy-Smirnov: scale = mu, supported on y > 0."""
    scale, y = _check_closed(kind, scale, y)
    if kind is ClosedKind.GAUSS:
        return math.exp(-(y * y) / (2.0 * scale * scale)) / (scale * math.sqrt(2.0 * math.pi))
    if kind is ClosedKind.CAUCHY_LORENTZ:
        return scale / (math.pi * (scale * scale + y * y))
    return math.sqrt(scale / (2.0 * math.pi)) * y**-1.5 * math.exp(-scale / (2.0 * y))


def stable_cdf_closed(kind: ClosedKind, scale: float, y: float) -> float:
    """Distribution functions matching stable_pdf_closed (erf / arctan / erfc)."""
    scale, y = _check_closed(kind, scale, y)
    if kind is ClosedKind.GAUSS:
        return 0.5 * (1.0 + math.erf(y / (scale * math.sqrt(2.0))))
    if kind is ClosedKind.CAUCHY_LORENTZ:
        return 0.5 + math.atan(y / scale) / math.pi
    return math.erfc(math.sqrt(scale / (2.0 * y)))


def stable_from_mwright(alpha: float, y: float, policy: EvalPolicy | None = None) -> float:
    """Extremal stable density through the M-Wright function.

    0 < alpha < 1: p_alpha(y; -alpha)  = (alpha / y^(alpha+1)) M_alpha(y^-alpha)
    1 < alpha < 2: p_alpha(y; alpha-2) = M_(1/alpha)(y) / alpha

    The skewness is implied by the route; alpha in {1, 2} is rejected
    (closed forms cover those)."""
    alpha = float(alpha)
    if alpha == 1.0 or alpha == 2.0:
        raise InvalidParams("alpha in {1, 2} handled by closed forms, not the M route")
    if not 0.0 < alpha < 2.0:
        raise InvalidParams(f"alpha must be in (0,1) or (1,2), got {alpha}")
    y = float(y)
    if not y > 0.0:
        raise InvalidDomain(f"extremal route needs y > 0, got {y}")
    if alpha < 1.0:
        return alpha / y ** (alpha + 1.0) * m_wright(alpha, y**-alpha, policy)
    return m_wright(1.0 / alpha, y, policy) / alpha


def stable_duality_residual(alpha: float, theta: float, y: float,
                            policy: EvalPolicy | None = None) -> float:
    """Absolute residual of the index duality

        y^-(alpha+1) p_(1/alpha)(y^-alpha; theta) = p_alpha(y; theta*),
        theta* = alpha (theta + 1) - 1,

    valid for 1/2 < alpha < 1, |theta| <= 2 - 1/alpha.  Both sides go
    through their own series branch, so this is a genuine dual-path check."""
    alpha = float(alpha)
    if not 0.5 < alpha < 1.0:
        raise InvalidParams(f"duality needs 1/2 < alpha < 1, got {alpha}")
    theta = float(theta)
    bound = 2.0 - 1.0 / alpha
    if abs(theta) > bound:
        if abs(theta) <= bound + 8.0 * _EPS:
            theta = math.copysign(bound, theta)  # boundary point, off by float dust
        else:
            raise InvalidParams(f"duality needs |theta| <= 2 - 1/alpha = {bound}, got {theta}")
    y = float(y)
    if not y > 0.0:
        raise InvalidDomain(f"needs y > 0, got {y}")
    theta_star = alpha * (theta + 1.0) - 1.0
    lhs = y ** -(alpha + 1.0) * stable_pdf_series(
        StableParams(1.0 / alpha, theta), y**-alpha, policy
    )
    rhs = stable_pdf_series(StableParams(alpha, theta_star), y, policy)
    return abs(lhs - rhs)


def signalling_as_stable_residual(nu: float, x: float, t: float, a: float,
                                  branch: Kind = Kind.SIGNALLING,
                                  policy: EvalPolicy | None = None) -> float:
    """Residual of the Green-function <-> stable-density identities.

    Signalling branch (0 < nu < 1):
        (x/sqrt(a))^(1/nu) G_s(x,t;nu) = p_nu(tau; -nu),  tau = t (sqrt(a)/x)^(1/nu)
    Cauchy branch (1/2 <= nu < 1):
        2 nu sqrt(a) t^nu G_c(|x|,t;nu) = p_(1/nu)(xi; 1/nu - 2),  xi = |x|/(sqrt(a) t^nu)

    The stable side is evaluated by its own series (closed Gauss at nu=1/2
    on the Cauchy branch), so the two sides share no code path."""
    nu, x, t, a = float(nu), float(x), float(t), float(a)
    if not 0.0 < nu < 1.0:
        raise InvalidParams(f"needs 0 < nu < 1, got {nu}")
    if not (x > 0.0 and t > 0.0 and a > 0.0):
        raise InvalidDomain("needs x > 0, t > 0, a > 0")
    sqrt_a = math.sqrt(a)
    order = FractionalOrder.from_nu(nu)
    if branch is Kind.SIGNALLING:
        spec = GreenSpec(Kind.SIGNALLING, a, order)
        lhs = (x / sqrt_a) ** (1.0 / nu) * green_signalling(spec, x, t, policy)
        tau = t * (sqrt_a / x) ** (1.0 / nu)
        rhs = stable_pdf_series(StableParams(nu, -nu), tau, policy)
        return abs(lhs - rhs)
    if nu < 0.5:
        raise InvalidParams(f"Cauchy branch requires 1/2 <= nu < 1, got {nu}")
    spec = GreenSpec(Kind.CAUCHY, a, order)
    xi = abs(x) / (sqrt_a * t**nu)
    lhs = 2.0 * nu * sqrt_a * t**nu * green_cauchy(spec, x, t, policy)
    if nu == 0.5:
        rhs = stable_pdf_closed(ClosedKind.GAUSS, math.sqrt(2.0), xi)
    else:
        alpha = 1.0 / nu
        rhs = stable_pdf_series(StableParams(alpha, alpha - 2.0), xi, policy)
    return abs(lhs - rhs)


def stable_extremal_survival(alpha: float, lam: float, n_nodes: int = 64) -> float:
    """P[Y > lam] for the one-sided extremal law p_alpha(y; -alpha), 0<alpha<1.

    Substituting u = y^-alpha turns the tail integral into
    integral_0^(lam^-alpha) M_alpha(u) du, a short smooth quadrature."""
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise InvalidParams(f"needs 0 < alpha < 1, got {alpha}")
    lam = float(lam)
    if not lam > 0.0:
        raise InvalidDomain(f"needs lam > 0, got {lam}")
    u0 = lam**-alpha
    nodes, weights = np.polynomial.legendre.leggauss(int(n_nodes))
    u = 0.5 * u0 * (nodes + 1.0)
    return float(0.5 * u0 * np.dot(weights, m_wright_arr(alpha, u)))


def stable_tail_exponent(alpha: float, lam_lo: float, lam_hi: float,
                         n_points: int = 15) -> float:
    """Fitted log-log slope of the extremal survival function over [lam_lo, lam_hi].

    The inverse-power tail makes this approach -alpha once lam^-alpha << 1."""
    lam_lo, lam_hi = float(lam_lo), float(lam_hi)
    if not (0.0 < lam_lo < lam_hi):
        raise InvalidDomain("need 0 < lam_lo < lam_hi")
    lams = np.geomspace(lam_lo, lam_hi, int(n_points))
    surv = np.array([stable_extremal_survival(alpha, la) for la in lams])
    return float(np.polyfit(np.log(lams), np.log(surv), 1)[0])
