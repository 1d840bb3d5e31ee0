"""Certified quadrature of r^n M_nu(r) on [0, inf) for the test suite.

Two Gauss-Legendre pieces over truncation radii chosen from the saddle
exponent Y(r) = ((1-nu)/nu) (nu r)^(1/(1-nu)):

* [0, R(Y=12.5)]: the series branch, noise <= ~e^12.5 eps << 1e-8 relative;
* [R(12.5), R(38)]: the contour branch (series cancellation is hopeless
  here, the integrand itself is e^-12.5 .. e^-38 of the peak).

Beyond R(38) the integrand is below 1e-16 of the peak and the analytic
tail bound certifies the cutoff.  Both branches are independent of the
closed-form moments they are used to check.
"""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from fdwave.laplace_oracle import bromwich_mwright
from fdwave.special_fn import EvalPolicy, m_wright_arr

_SERIES_POLICY = EvalPolicy(max_terms=600)


def split_radius(nu: float, y: float) -> float:
    """The r at which the saddle exponent Y(r) reaches y."""
    return (y * nu / (1.0 - nu)) ** (1.0 - nu) / nu


@lru_cache(maxsize=None)
def _m_nodes(nu: float):
    r_mid = split_radius(nu, 12.5)
    r_far = split_radius(nu, 38.0)
    xs, ws = np.polynomial.legendre.leggauss(220)
    r1 = 0.5 * r_mid * (xs + 1.0)
    w1 = 0.5 * r_mid * ws
    m1 = m_wright_arr(nu, r1, _SERIES_POLICY)
    xs, ws = np.polynomial.legendre.leggauss(48)
    r2 = r_mid + 0.5 * (r_far - r_mid) * (xs + 1.0)
    w2 = 0.5 * (r_far - r_mid) * ws
    m2 = np.array([bromwich_mwright(nu, float(r))[0] for r in r2])
    return np.concatenate([r1, r2]), np.concatenate([w1 * m1, w2 * m2])


def m_moment_quad(nu: float, n: int) -> float:
    """integral r^n M_nu(r) dr on [0, inf), certified truncation."""
    r, wm = _m_nodes(nu)
    return float(np.sum(r**n * wm))


def m_partial_integral(nu: float, upper: float) -> float:
    """integral_0^upper M_nu(r) dr by a dedicated 220-node rule (series branch)."""
    if not upper > 0.0:
        raise ValueError("upper must be > 0")
    xs, ws = np.polynomial.legendre.leggauss(220)
    r = 0.5 * upper * (xs + 1.0)
    w = 0.5 * upper * ws
    return float(np.sum(w * m_wright_arr(nu, r, _SERIES_POLICY)))


def m_certified(nu: float, r: float) -> float:
    """M_nu(r) from a certified branch only: series inside the crossover
    radius, contour inversion beyond it (never the one-term saddle form)."""
    from fdwave.special_fn import default_crossover

    if r <= default_crossover(nu):
        return float(m_wright_arr(nu, np.array([r]), _SERIES_POLICY)[0])
    return bromwich_mwright(nu, r)[0]
