"""Hot numerical kernels, numba-compiled when the backend allows.

Pure-NumPy equivalents live in _kernels_np; dispatch happens in _dispatch.
Status codes shared by both backends:
    0 = converged, 1 = max_terms reached, 2 = term overflow (precision lost).
"""
import math

import numpy as np

from ._backend import jit
from ._gamma import gamma, gammaln_pos, rgamma

_EPS = 2.220446049250313e-16
_TINY = 5e-324
_LN_PI = 1.1447298858494002

# a run of this many consecutive sub-tolerance terms ends the summation;
# poles of 1/Gamma zero out at most every other term, so a window of 8
# always contains at least four genuinely small terms
_BREAK_RUN = 8


@jit()
def wright_series_scalar(lam: float, mu: float, z: float, tol: float, max_terms: int):
    """Kahan-summed power series sum_n z^n / (n! Gamma(lam*n + mu)).

    Returns (value, abs_term_sum, terms_used, status).
    """
    s = 0.0
    comp = 0.0
    abs_sum = 0.0
    term_z = 1.0  # z^n / n!
    run = 0
    n_used = 0
    status = 1
    for n in range(max_terms):
        if term_z == 0.0:
            # z^n/n! underflowed: every remaining term is an exact float zero
            # (and the true remainder is far below the accumulated noise)
            status = 0
            break
        x = lam * n + mu
        t = term_z * rgamma(x)
        if not math.isfinite(t):
            # 1/Gamma(x) exceeded float range (x deep on the negative axis).
            # The true term may still be negligible: measure it in log space
            # via the reflection 1/Gamma(x) = Gamma(1-x) sin(pi x)/pi.  This
            # far past the magnitude peak terms decay geometrically, so a
            # 4x multiple of the current term bounds the whole tail; fold it
            # into abs_sum so the caller's eps*abs_sum estimate stays honest.
            ln_rg = (
                gammaln_pos(1.0 - x)
                + math.log(abs(math.sin(math.pi * x)) + _TINY)
                - _LN_PI
            )
            ln_term = math.log(term_z) + ln_rg
            if ln_term < 700.0:
                tail = 4.0 * math.exp(ln_term)
                if tail <= 1e-4 * (abs(s) + _TINY):
                    abs_sum += tail / _EPS
                    status = 0
                    break
            return s, abs_sum, n, 2
        abs_sum += abs(t)
        y = t - comp
        tmp = s + y
        comp = (tmp - s) - y
        s = tmp
        term_z *= z / (n + 1.0)
        n_used = n + 1
        if abs(t) <= tol:
            run += 1
            if run >= _BREAK_RUN and n >= 16:
                status = 0
                break
        else:
            run = 0
    return s, abs_sum, n_used, status


@jit()
def mwright_series_arr(nu: float, r: np.ndarray, tol: float, max_terms: int):
    """M_nu at each r[i] by the defining series (lam=-nu, mu=1-nu, z=-r)."""
    n = r.shape[0]
    vals = np.empty(n)
    abs_sums = np.empty(n)
    statuses = np.zeros(n, dtype=np.int64)
    for i in range(n):
        v, a, _, st = wright_series_scalar(-nu, 1.0 - nu, -r[i], tol, max_terms)
        vals[i] = v
        abs_sums[i] = a
        statuses[i] = st
    return vals, abs_sums, statuses


@jit()
def ptrap_weights(mu: float, n: int) -> np.ndarray:
    """Product-trapezoidal weights a_{j,n}, j = 0..n, for the RL integral.

    J^mu f(t_n) = dt^mu / Gamma(mu+2) * sum_j a_{j,n} f_j; exact for
    piecewise-linear f against the (t-tau)^(mu-1) kernel.
    """
    w = np.empty(n + 1)
    e = mu + 1.0
    w[n] = 1.0
    if n == 0:
        return w
    w[0] = (n - 1.0) ** e - (n - e) * float(n) ** mu
    for j in range(1, n):
        k = float(n - j)
        w[j] = (k + 1.0) ** e + (k - 1.0) ** e - 2.0 * k**e
    return w


@jit()
def ptrap_integral_grid(f: np.ndarray, dt: float, mu: float) -> np.ndarray:
    """J^mu f on every node of the uniform grid (O(N^2))."""
    n_nodes = f.shape[0]
    out = np.zeros(n_nodes)
    c = dt**mu / gamma(mu + 2.0)
    for n in range(1, n_nodes):
        w = ptrap_weights(mu, n)
        acc = 0.0
        comp = 0.0
        for j in range(n + 1):
            y = w[j] * f[j] - comp
            tmp = acc + y
            comp = (tmp - acc) - y
            acc = tmp
        out[n] = c * acc
    return out


@jit()
def direct_march(w0: np.ndarray, dx: float, dt: float, a: float, beta: float, nt: int):
    """Explicit predictor-corrector marching for
    w(t_n) = w0 + a * J^beta (d2w/dx2)(t_n), zero-Dirichlet edges.

    Returns (field with shape (nt+1, nx), stable_flag).
    """
    nx = w0.shape[0]
    w = np.zeros((nt + 1, nx))
    w[0] = w0
    lap_hist = np.zeros((nt + 1, nx))
    inv_dx2 = 1.0 / (dx * dx)
    for i in range(1, nx - 1):
        lap_hist[0, i] = (w0[i + 1] - 2.0 * w0[i] + w0[i - 1]) * inv_dx2
    c = dt**beta / gamma(beta + 2.0)
    cap = 10.0 * np.max(np.abs(w0))
    wp = np.empty(nx)
    lap_p = np.zeros(nx)
    for n in range(1, nt + 1):
        wts = ptrap_weights(beta, n)
        # memory part over known history j = 0..n-1
        for i in range(1, nx - 1):
            acc = 0.0
            for j in range(n):
                acc += wts[j] * lap_hist[j, i]
            mem = a * c * acc
            # predictor: freeze the newest Laplacian at its previous value
            wp[i] = w0[i] + mem + a * c * lap_hist[n - 1, i]
            w[n, i] = w0[i] + mem
        wp[0] = 0.0
        wp[nx - 1] = 0.0
        for i in range(1, nx - 1):
            lap_p[i] = (wp[i + 1] - 2.0 * wp[i] + wp[i - 1]) * inv_dx2
        for i in range(1, nx - 1):
            w[n, i] += a * c * lap_p[i]
        w[n, 0] = 0.0
        w[n, nx - 1] = 0.0
        mx = 0.0
        for i in range(nx):
            if abs(w[n, i]) > mx:
                mx = abs(w[n, i])
        if mx > cap:
            return w, False
        for i in range(1, nx - 1):
            lap_hist[n, i] = (w[n, i + 1] - 2.0 * w[n, i] + w[n, i - 1]) * inv_dx2
    return w, True
