"""Independent numerical Laplace-inversion oracles.

Two deliberately different routes, used to validate the series/asymptotic
evaluation paths:

* ``talbot_invert`` — fixed-Talbot deformed-contour inversion for transforms
  analytic off the negative real axis (the transformed Green functions).
* ``bromwich_mwright`` — direct quadrature of the Bromwich integral for M_nu
  after deformation onto a branch-cut-wrapping (Hankel-type) contour: a circle
  of radius ``contour_scale`` joined to straight rays at +/- 3pi/4.

Both are test-facing: correctness first, no performance contract.  Principal
branch of s^nu throughout (arg s in (-pi, pi)).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InvalidDomain, InvalidParams, Unstable

# fixed-Talbot nodes with t*Re(s) below this are pure underflow; skipping them
# is sound whenever ln|F(s)| grows slower than |Re s| t / 2 on the far contour,
# which holds for every transform in this package (|F| = O(exp(c |s|^nu)), nu<1)
_SKIP_EXPONENT = -700.0

_REL_DISAGREE = 1e-4  # two-grid relative disagreement that flags instability
_EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class TransformFn:
    """A Laplace-domain evaluator with its branch-cut description."""

    fn: Callable[[complex], complex]
    branch_cut: str = "negative real axis"

    def __call__(self, s: complex) -> complex:
        return self.fn(s)


@dataclass(frozen=True)
class ContourConfig:
    """Inversion contour controls.

    For the fixed-Talbot rule in binary64 the node count sweet spot is ~32:
    truncation error falls like 10^(-0.6 M) but roundoff grows like
    e^(0.4 M) eps, so pushing M to 64+ makes answers worse, not better."""

    node_count: int = 32
    contour_scale: float = 1.0

    def __post_init__(self):
        if self.node_count < 8 or self.node_count % 2 != 0:
            raise InvalidParams("node_count must be even and >= 8")
        if not self.contour_scale > 0.0:
            raise InvalidParams("contour_scale must be > 0")


def _talbot_fixed(transform, t: float, m: int, scale: float):
    """Abate-Valko fixed-Talbot rule with m nodes; returns (value, abs_scale)."""
    r = 0.4 * m * scale / t
    terms = [0.5 * math.exp(r * t) * complex(transform(complex(r, 0.0))).real]
    for k in range(1, m):
        theta = k * math.pi / m
        cot = math.cos(theta) / math.sin(theta)
        s = r * theta * complex(cot, 1.0)
        if t * s.real < _SKIP_EXPONENT:
            continue
        sigma = theta + (theta * cot - 1.0) * cot
        term = cmath.exp(t * s) * complex(transform(s)) * complex(1.0, sigma)
        terms.append(term.real)
    pref = r / m
    return pref * math.fsum(terms), pref * math.fsum(abs(v) for v in terms)


def _gate(fine: float, coarse: float, abs_scale: float, what: str):
    """Two-grid agreement check with a roundoff floor.

    Disagreement is judged relative to the value, but never below the
    compensated-sum roundoff floor: when the answer sits at eps times the
    node magnitudes, bit-level wobble is not instability."""
    est = abs(fine - coarse)
    floor = _EPS * abs_scale
    if est > max(_REL_DISAGREE * abs(fine), 32.0 * floor):
        raise Unstable(f"two-grid {what} estimates disagree: {fine} vs {coarse}")
    return fine, max(est, floor)


def talbot_invert(transform, t: float, cfg: ContourConfig | None = None):
    """Invert a Laplace transform at t > 0; returns (value, error_estimate).

    The estimate is the disagreement with a half-node-count run; disagreement
    beyond 1e-4 relative (and above the roundoff floor) raises Unstable."""
    cfg = cfg or ContourConfig()
    if not t > 0.0:
        raise InvalidDomain("talbot_invert needs t > 0")
    fine, abs_scale = _talbot_fixed(transform, t, cfg.node_count, cfg.contour_scale)
    coarse, _ = _talbot_fixed(transform, t, cfg.node_count // 2, cfg.contour_scale)
    return _gate(fine, coarse, abs_scale, f"Talbot (t={t})")


_PHI0 = 0.75 * math.pi  # ray angle of the branch-cut wrap


def _hankel_mwright(nu: float, r: float, nodes: int, rho: float) -> float:
    """(1/pi) Im of the wrapped-contour integral of exp(sigma - r sigma^nu) sigma^(nu-1)."""

    def g(sig: complex) -> complex:
        return cmath.exp(sig - r * sig**nu) * sig ** (nu - 1.0)

    x_gl, w_gl = np.polynomial.legendre.leggauss(nodes)
    terms = []
    # circular joint, upper half: sigma = rho e^(i phi), phi in [0, phi0]
    half = 0.5 * _PHI0
    for xi, wi in zip(x_gl, w_gl):
        phi = half * (xi + 1.0)
        sig = rho * cmath.exp(1j * phi)
        terms.append((wi * half * g(sig) * 1j * sig).imag)
    # outgoing ray: sigma = u e^(i phi0), u in [rho, U]; truncate when the
    # integrand magnitude bound drops below 1e-20 of unity
    cos0 = math.cos(_PHI0)
    u_hi = max(60.0, rho + 30.0)
    for _ in range(3):
        u_hi = max(60.0, rho + 30.0, (46.0 + r * u_hi**nu) / -cos0)
    e_dir = cmath.exp(1j * _PHI0)
    n_panels = max(2, int(math.ceil((u_hi - rho) / 15.0)))
    edges = np.linspace(rho, u_hi, n_panels + 1)
    for a_edge, b_edge in zip(edges[:-1], edges[1:]):
        mid = 0.5 * (a_edge + b_edge)
        hw = 0.5 * (b_edge - a_edge)
        for xi, wi in zip(x_gl, w_gl):
            sig = (mid + hw * xi) * e_dir
            terms.append((wi * hw * g(sig) * e_dir).imag)
    return math.fsum(terms) / math.pi, math.fsum(abs(v) for v in terms) / math.pi


def bromwich_mwright(nu: float, r: float, cfg: ContourConfig | None = None):
    """M_nu(r) by contour quadrature; returns (value, error_estimate)."""
    cfg = cfg or ContourConfig()
    nu = float(nu)
    if not 0.0 < nu < 1.0:
        raise InvalidParams(f"nu must be in (0, 1), got {nu}")
    if r < 0.0:
        raise InvalidDomain("M_nu is defined on r >= 0")
    # pass the circle through the ray-direction saddle of exp(sigma - r sigma^nu)
    # so the integrand peaks at the answer's own magnitude (no blind cancellation)
    rho = cfg.contour_scale * max(1.0, (nu * float(r)) ** (1.0 / (1.0 - nu)))
    fine, abs_scale = _hankel_mwright(nu, float(r), cfg.node_count, rho)
    coarse, _ = _hankel_mwright(nu, float(r), cfg.node_count // 2, rho)
    return _gate(fine, coarse, abs_scale, f"contour (nu={nu}, r={r})")
