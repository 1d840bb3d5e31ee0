"""Pure-NumPy fallback implementations of the hot kernels.

Same contracts and status codes as _kernels; selected by _dispatch when numba
is unavailable or FDWAVE_NO_NUMBA is set.
"""
import math

import numpy as np

from ._gamma import gamma, gammaln_pos, rgamma
from ._kernels import _BREAK_RUN, _EPS, _LN_PI, _TINY


def _saturated_tail(x: float, term_z: float, s: float):
    """Tail bound for a term whose 1/Gamma(x) overflowed, via the reflection
    formula in log space; returns the bound when it is negligible relative
    to the partial sum s, else None (geometric decay past the peak makes
    4x the current term a bound for the whole remainder)."""
    ln_rg = gammaln_pos(1.0 - x) + math.log(abs(math.sin(math.pi * x)) + _TINY) - _LN_PI
    ln_term = math.log(term_z) + ln_rg
    if ln_term < 700.0:
        tail = 4.0 * math.exp(ln_term)
        if tail <= 1e-4 * (abs(s) + _TINY):
            return tail
    return None


def wright_series_scalar(lam: float, mu: float, z: float, tol: float, max_terms: int):
    s = 0.0
    comp = 0.0
    abs_sum = 0.0
    term_z = 1.0
    run = 0
    n_used = 0
    status = 1
    for n in range(max_terms):
        if term_z == 0.0:
            # z^n/n! underflowed: every remaining term is an exact float zero
            status = 0
            break
        x = lam * n + mu
        t = term_z * rgamma(x)
        if not math.isfinite(t):
            tail = _saturated_tail(x, term_z, s)
            if tail is not None:
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


def mwright_series_arr(nu: float, r: np.ndarray, tol: float, max_terms: int):
    """Vectorized Kahan summation; elements freeze once their window closes."""
    m = r.shape[0]
    z = -np.asarray(r, dtype=float)
    s = np.zeros(m)
    comp = np.zeros(m)
    abs_sums = np.zeros(m)
    term_z = np.ones(m)
    run = np.zeros(m, dtype=np.int64)
    statuses = np.ones(m, dtype=np.int64)
    active = np.ones(m, dtype=bool)
    for n in range(max_terms):
        if not active.any():
            break
        underflowed = active & (term_z == 0.0)  # exact-zero remainder
        if underflowed.any():
            statuses[underflowed] = 0
            active &= ~underflowed
            if not active.any():
                break
        x = -nu * n + 1.0 - nu
        rg = rgamma(x)
        with np.errstate(invalid="ignore", over="ignore"):
            t = np.where(active, term_z * rg, 0.0)
        bad = active & ~np.isfinite(t)
        if bad.any():
            for i in np.nonzero(bad)[0]:
                tail = _saturated_tail(x, term_z[i], s[i])
                if tail is not None:
                    abs_sums[i] += tail / _EPS
                    statuses[i] = 0
                else:
                    statuses[i] = 2
            active &= ~bad
            t[bad] = 0.0
        abs_sums += np.abs(t)
        y = np.where(active, t - comp, 0.0)
        tmp = np.where(active, s + y, s)
        comp = np.where(active, (tmp - s) - y, comp)
        s = tmp
        term_z *= z / (n + 1.0)
        small = np.abs(t) <= tol
        run = np.where(small, run + 1, 0)
        done = active & (run >= _BREAK_RUN) & (n >= 16)
        if done.any():
            statuses[done] = 0
            active &= ~done
    return s, abs_sums, statuses


def ptrap_weights(mu: float, n: int) -> np.ndarray:
    e = mu + 1.0
    w = np.empty(n + 1)
    w[n] = 1.0
    if n == 0:
        return w
    w[0] = (n - 1.0) ** e - (n - e) * float(n) ** mu
    if n > 1:
        k = np.arange(n - 1, 0, -1, dtype=float)
        w[1:n] = (k + 1.0) ** e + (k - 1.0) ** e - 2.0 * k**e
    return w


def ptrap_integral_grid(f: np.ndarray, dt: float, mu: float) -> np.ndarray:
    n_nodes = f.shape[0]
    out = np.zeros(n_nodes)
    c = dt**mu / gamma(mu + 2.0)
    for n in range(1, n_nodes):
        out[n] = c * np.dot(ptrap_weights(mu, n), f[: n + 1])
    return out


def direct_march(w0: np.ndarray, dx: float, dt: float, a: float, beta: float, nt: int):
    nx = w0.shape[0]
    w = np.zeros((nt + 1, nx))
    w[0] = w0
    lap_hist = np.zeros((nt + 1, nx))
    inv_dx2 = 1.0 / (dx * dx)
    lap_hist[0, 1:-1] = (w0[2:] - 2.0 * w0[1:-1] + w0[:-2]) * inv_dx2
    c = dt**beta / gamma(beta + 2.0)
    cap = 10.0 * np.max(np.abs(w0))
    for n in range(1, nt + 1):
        wts = ptrap_weights(beta, n)
        mem = a * c * (wts[:n] @ lap_hist[:n])
        wp = w0 + mem + a * c * lap_hist[n - 1]
        wp[0] = 0.0
        wp[-1] = 0.0
        lap_p = np.zeros(nx)
        lap_p[1:-1] = (wp[2:] - 2.0 * wp[1:-1] + wp[:-2]) * inv_dx2
        w[n] = w0 + mem + a * c * lap_p
        w[n, 0] = 0.0
        w[n, -1] = 0.0
        if np.max(np.abs(w[n])) > cap:
            return w, False
        lap_hist[n, 1:-1] = (w[n, 2:] - 2.0 * w[n, 1:-1] + w[n, :-2]) * inv_dx2
    return w, True
