"""Wright function W_(lam,mu), the auxiliary densities M_nu and F_nu, and
their asymptotic / closed-form / moment companions.

Evaluation strategy: the defining power series (Kahan-compensated, reciprocal
Gamma convention so pole terms vanish) below a per-nu crossover radius, and
the leading-order saddle-point form beyond it.  ``overlap_band_check``
measures the agreement of the two branches where they meet; with the
leading-order asymptotic and binary64 series arithmetic, the achievable
agreement floor depends strongly on nu (it is ~1e-16 at nu = 1/2, where the
saddle-point form is exact, and 1e-3..1e-2 elsewhere).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._dispatch import mwright_series_arr, wright_series_scalar
from ._gamma import gammaln_pos
from .errors import (
    Degenerate,
    DistributionalLimit,
    InvalidDomain,
    InvalidParams,
    NonConvergent,
)

_EPS = float(np.finfo(float).eps)

# saddle point widens as nu -> 1 and the leading-order value degrades;
# beyond this the asymptotic branch refuses to answer
NU_DEGENERATE = 1.0 - 1e-6


class Method(enum.Enum):
    AUTO = "auto"
    SERIES_ONLY = "series"
    ASYMPTOTIC_ONLY = "asymptotic"
    CONTOUR = "contour"


@dataclass(frozen=True)
class WrightParams:
    """(lam, mu) of W_(lam,mu); lam > -1 strictly, mu >= 0."""

    lam: float
    mu: float

    def __post_init__(self):
        if not self.lam > -1.0:
            raise InvalidParams(f"lam must be > -1, got {self.lam}")
        if not self.mu >= 0.0:
            raise InvalidParams(f"mu must be >= 0, got {self.mu}")


@dataclass(frozen=True)
class EvalPolicy:
    """Truncation and method-selection controls for series evaluation.

    series_tol is an absolute per-term truncation target; crossover_radius
    of None means the per-nu default (see ``default_crossover``).
    """

    series_tol: float = 1e-16
    max_terms: int = 400
    crossover_radius: float | None = None
    method_override: Method = Method.AUTO

    def __post_init__(self):
        if not self.series_tol > 0.0:
            raise InvalidParams("series_tol must be > 0")
        if self.max_terms < 1:
            raise InvalidParams("max_terms must be >= 1")
        if self.crossover_radius is not None and not self.crossover_radius > 0.0:
            raise InvalidParams("crossover_radius must be > 0")


_DEFAULT_POLICY = EvalPolicy()


def _series_wall(nu: float) -> float:
    """Largest radius where the series can finish before 1/Gamma leaves
    float range (arguments below about -170.6).

    The last representable term has index n1 ~ 171.62/nu; solving
    term(n1) = r^n1 * Gamma(nu*n1)/Gamma(n1+1) < e^-23 for r gives the
    radius where the truncated tail is safely below any useful noise floor.
    Only binds for nu above ~0.8; elsewhere the terms underflow first."""
    n1 = 171.62 / nu
    return math.exp((gammaln_pos(n1) - gammaln_pos(nu * n1) - 23.0) / n1)


def default_crossover(nu: float) -> float:
    """Series/asymptotic switch radius: 4 up to nu = 1/2, linear down to 2 at
    nu = 3/4, then held at 2 — always capped by the float-range series wall."""
    if nu <= 0.5:
        return 4.0
    if nu >= 0.75:
        return min(2.0, _series_wall(nu))
    return 4.0 - 8.0 * (nu - 0.5)


def _check_nu(nu: float) -> float:
    nu = float(nu)
    if nu == 1.0:
        raise DistributionalLimit(
            "M_1 is not point-evaluable",
            description="M_1(r) = delta(r - 1): unit impulse at r = 1",
        )
    if not 0.0 < nu < 1.0:
        raise InvalidParams(f"nu must be in (0, 1), got {nu}")
    return nu


def _series_raise(status: int, what: str, n_used: int):
    if status == 1:
        raise NonConvergent(f"{what}: tolerance not reached within {n_used} terms")
    if status == 2:
        raise NonConvergent(f"{what}: term overflow after {n_used} terms (precision lost)")


def wright_series(p: WrightParams, z: float, policy: EvalPolicy | None = None) -> float:
    """W_(lam,mu)(z) = sum_n z^n / (n! Gamma(lam n + mu)) by direct summation."""
    policy = policy or _DEFAULT_POLICY
    val, _, n_used, status = wright_series_scalar(
        p.lam, p.mu, float(z), policy.series_tol, policy.max_terms
    )
    _series_raise(status, "wright_series", n_used)
    return val


def _m_series(nu: float, r: float, policy: EvalPolicy, may_fail: bool = False):
    """Series M_nu(r) -> (value, noise, status); clamps sub-noise negatives.

    With may_fail, a precision-lost status (2) is reported to the caller
    instead of raised, so AUTO can fall back to the asymptotic branch."""
    val, abs_sum, n_used, status = wright_series_scalar(
        -nu, 1.0 - nu, -r, policy.series_tol, policy.max_terms
    )
    if not (may_fail and status == 2):
        _series_raise(status, "m_wright series", n_used)
    noise = 4.0 * _EPS * abs_sum + 2.0 * policy.series_tol
    if status == 0 and val < 0.0:
        if -val <= noise:
            val = 0.0  # indistinguishable from zero at this precision
        else:
            raise NonConvergent(
                f"m_wright series at r={r}: negative value {val} exceeds noise floor {noise}"
            )
    return val, noise, status


def m_wright_asymptotic(nu: float, x: float) -> float:
    """Leading-order saddle-point value of M_nu(x) for large argument.

    With r = nu*x:  M_nu(x) ~ r^((nu-1/2)/(1-nu)) / sqrt(2 pi (1-nu))
                              * exp(-((1-nu)/nu) r^(1/(1-nu))).
    Exact at nu = 1/2.  Refuses nu >= 1 - 1e-6 (wide saddle)."""
    nu = float(nu)
    if nu >= NU_DEGENERATE:
        raise Degenerate(
            f"saddle-point form untrustworthy for nu={nu} >= {NU_DEGENERATE}"
        )
    if not 0.0 < nu < 1.0:
        raise InvalidParams(f"nu must be in (0, 1), got {nu}")
    if not x > 0.0:
        raise InvalidDomain("asymptotic branch needs x > 0")
    r = nu * x
    rho = (nu - 0.5) / (1.0 - nu)
    y_exp = (1.0 - nu) / nu * r ** (1.0 / (1.0 - nu))
    return r**rho / math.sqrt(2.0 * math.pi * (1.0 - nu)) * math.exp(-y_exp)


def m_wright_info(nu: float, r: float, policy: EvalPolicy | None = None):
    """M_nu(r) together with the branch used and an error estimate.

    Returns (value, method_name, error_estimate)."""
    nu = _check_nu(nu)
    policy = policy or _DEFAULT_POLICY
    r = float(r)
    if r < 0.0:
        raise InvalidDomain("M_nu is defined on r >= 0")
    mode = policy.method_override
    if mode is Method.CONTOUR:
        from .laplace_oracle import ContourConfig, bromwich_mwright

        val, est = bromwich_mwright(nu, r, ContourConfig())
        return val, "contour", est
    if mode is Method.ASYMPTOTIC_ONLY:
        val = m_wright_asymptotic(nu, r)
        return val, "asymptotic", _asymp_estimate(nu, r, val)
    xc = policy.crossover_radius if policy.crossover_radius is not None else default_crossover(nu)
    if mode is Method.SERIES_ONLY or r <= xc or nu >= NU_DEGENERATE:
        allow_fallback = mode is Method.AUTO and nu < NU_DEGENERATE
        val, noise, status = _m_series(nu, r, policy, may_fail=allow_fallback)
        if status != 2:
            return val, "series", noise
        # the series self-reported float-range precision loss; this only
        # happens past the saddle-exponent peak, where the asymptotic form
        # is available and its honest O(1/Y) estimate applies
    val = m_wright_asymptotic(nu, r)
    return val, "asymptotic", _asymp_estimate(nu, r, val)


def _asymp_estimate(nu: float, x: float, val: float) -> float:
    # leading neglected correction is O(1/Y) with Y the saddle exponent
    y_exp = (1.0 - nu) / nu * (nu * x) ** (1.0 / (1.0 - nu))
    return abs(val) / max(y_exp, 1.0)


def m_wright(nu: float, r: float, policy: EvalPolicy | None = None) -> float:
    """M_nu(r) = W_(-nu,1-nu)(-r), the M-Wright (Mainardi) density profile."""
    return m_wright_info(nu, r, policy)[0]


def _series_arr(nu: float, r: np.ndarray, policy: EvalPolicy):
    """Vectorized series M_nu -> (values, statuses); clamps sub-noise
    negatives on converged lanes, raises on super-noise negatives."""
    vals, abs_sums, statuses = mwright_series_arr(nu, r, policy.series_tol, policy.max_terms)
    noise = 4.0 * _EPS * abs_sums + 2.0 * policy.series_tol
    neg = (statuses == 0) & (vals < 0.0)
    if neg.any():
        fixable = neg & (-vals <= noise)
        vals = np.where(fixable, 0.0, vals)
        if (neg & ~fixable).any():
            i = int(np.argmax(neg & ~fixable))
            raise NonConvergent(
                f"m_wright series at r={r[i]}: negative value beyond noise floor"
            )
    return vals, statuses


def m_wright_arr(nu: float, r: np.ndarray, policy: EvalPolicy | None = None) -> np.ndarray:
    """Series-branch M_nu over an array (used by grid sweeps and quadrature)."""
    nu = _check_nu(nu)
    policy = policy or _DEFAULT_POLICY
    r = np.ascontiguousarray(r, dtype=float)
    if (r < 0).any():
        raise InvalidDomain("M_nu is defined on r >= 0")
    vals, statuses = _series_arr(nu, r, policy)
    if (statuses != 0).any():
        bad = int(np.argmax(statuses != 0))
        _series_raise(int(statuses[bad]), f"m_wright series at r={r[bad]}", policy.max_terms)
    return vals


def m_wright_profile(nu: float, r: np.ndarray, policy: EvalPolicy | None = None) -> np.ndarray:
    """M_nu over an array with the same series/asymptotic switch as m_wright.

    Series below the crossover radius, saddle-point form beyond it; the
    whole array stays on the series when nu is in the degenerate band."""
    nu = _check_nu(nu)
    policy = policy or _DEFAULT_POLICY
    r = np.ascontiguousarray(r, dtype=float)
    xc = policy.crossover_radius if policy.crossover_radius is not None else default_crossover(nu)
    if policy.method_override is not Method.AUTO:
        raise InvalidParams("m_wright_profile supports only the auto policy")
    if nu >= NU_DEGENERATE:
        return m_wright_arr(nu, r, policy)
    out = np.empty_like(r)
    far = r > xc
    near = ~far
    if near.any():
        vals, statuses = _series_arr(nu, r[near], policy)
        if (statuses == 1).any():
            bad = int(np.argmax(statuses == 1))
            _series_raise(1, f"m_wright series at r={r[near][bad]}", policy.max_terms)
        out[near] = vals
        if (statuses == 2).any():
            # float-range precision loss just below the nominal crossover:
            # those lanes are past the saddle peak, hand them to the far branch
            far[np.flatnonzero(near)[statuses == 2]] = True
    if far.any():
        rs = nu * r[far]
        rho = (nu - 0.5) / (1.0 - nu)
        y_exp = (1.0 - nu) / nu * rs ** (1.0 / (1.0 - nu))
        out[far] = rs**rho / math.sqrt(2.0 * math.pi * (1.0 - nu)) * np.exp(-y_exp)
    return out


def f_wright(nu: float, r: float, policy: EvalPolicy | None = None) -> float:
    """F_nu(r) = nu * r * M_nu(r) (the identity route, preferred)."""
    nu = _check_nu(nu)
    r = float(r)
    if r < 0.0:
        raise InvalidDomain("F_nu is evaluated on r >= 0")
    if r == 0.0:
        return 0.0
    return nu * r * m_wright(nu, r, policy)


def f_wright_series(nu: float, r: float, policy: EvalPolicy | None = None) -> float:
    """F_nu(r) = W_(-nu,0)(-r) by its own series — independent cross-check path."""
    nu = _check_nu(nu)
    policy = policy or _DEFAULT_POLICY
    r = float(r)
    if r < 0.0:
        raise InvalidDomain("F_nu is evaluated on r >= 0")
    val, _, n_used, status = wright_series_scalar(
        -nu, 0.0, -r, policy.series_tol, policy.max_terms
    )
    _series_raise(status, "f_wright series", n_used)
    return val


def m_wright_moment(nu: float, n: int) -> float:
    """Closed form of the n-th moment of M_nu on [0, inf):
    integral r^n M_nu(r) dr = Gamma(n+1) / Gamma(nu n + 1)."""
    from ._gamma import gamma

    nu = float(nu)
    if not 0.0 < nu <= 1.0:
        raise InvalidParams(f"nu must be in (0, 1], got {nu}")
    n = int(n)
    if n < 0:
        raise InvalidParams("moment order must be >= 0")
    return gamma(n + 1.0) / gamma(nu * n + 1.0)


def m_wright_closed_half(r) -> np.ndarray | float:
    """Exact M_(1/2)(r) = exp(-r^2/4)/sqrt(pi) (Gaussian case)."""
    r = np.asarray(r, dtype=float)
    out = np.exp(-(r**2) / 4.0) / math.sqrt(math.pi)
    return out if out.ndim else float(out)


def m_wright_closed_zero(r) -> np.ndarray | float:
    """nu -> 0 limit M_0(r) = exp(-r)."""
    r = np.asarray(r, dtype=float)
    out = np.exp(-r)
    return out if out.ndim else float(out)


def m_wright_tail_bound(nu: float, big_r: float) -> float:
    """Upper bound on integral_{big_r}^inf M_nu(r) dr from the saddle form.

    Substituting u = ((1-nu)/nu) (nu r)^(1/(1-nu)) collapses the integrated
    saddle-point profile to erfc(sqrt(u_R))/sqrt(2 nu), exact for nu = 1/2.
    A factor 2 headroom covers the O(1/Y) correction region."""
    nu = float(nu)
    if not 0.0 < nu < 1.0:
        raise InvalidParams(f"nu must be in (0, 1), got {nu}")
    if big_r <= 0.0:
        raise InvalidDomain("tail bound needs big_r > 0")
    c = (1.0 - nu) / nu
    k = 1.0 / (1.0 - nu)
    u_r = c * (nu * big_r) ** k
    return 2.0 * math.erfc(math.sqrt(u_r)) / math.sqrt(2.0 * nu)


def overlap_band_check(
    nu: float,
    policy: EvalPolicy | None = None,
    lo: float | None = None,
    hi: float | None = None,
    n: int = 61,
):
    """Scan the series/asymptotic overlap band; returns (r_best, min_rel_disc).

    The discrepancy is |series - asymptotic| / max(|series|, |asymptotic|).
    Points where either branch fails (series non-convergent, asymptotic
    underflow to 0) are skipped."""
    nu = _check_nu(nu)
    policy = policy or _DEFAULT_POLICY
    xc = policy.crossover_radius if policy.crossover_radius is not None else default_crossover(nu)
    lo = lo if lo is not None else max(0.5 * xc, 0.5)
    hi = hi if hi is not None else 5.0 * xc
    best_r, best = math.nan, math.inf
    for r in np.geomspace(lo, hi, n):
        try:
            s_val, _, _ = _m_series(nu, float(r), policy)
            a_val = m_wright_asymptotic(nu, float(r))
        except (NonConvergent, Degenerate):
            continue
        scale = max(abs(s_val), abs(a_val))
        if scale == 0.0 or not math.isfinite(scale):
            continue
        disc = abs(s_val - a_val) / scale
        if disc < best:
            best, best_r = disc, float(r)
    if not math.isfinite(best):
        raise NonConvergent(f"no usable overlap point for nu={nu} in [{lo}, {hi}]")
    return best_r, best
