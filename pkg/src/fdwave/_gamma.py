"""Real-axis Gamma machinery: Lanczos approximation plus reflection.

Self-contained on purpose — the series kernels need a signed reciprocal Gamma
that is total on the real line (zeros at the poles, saturating to +/-inf when
1/Gamma overflows) and compilable by numba.  Accuracy target is 1e-13 relative
on the ranges the series visit; validated against tabulated high-precision
values in the test suite.
"""
import math

import numpy as np

from ._backend import jit

# Godfrey's 15-term Lanczos coefficient set, g = 607/128.
LANCZOS_G = 4.7421875
_LANCZOS_C = np.array(
    [
        0.99999999999999709182,
        57.156235665862923517,
        -59.597960355475491248,
        14.136097974741747174,
        -0.49191381609762019978,
        0.33994649984811888699e-4,
        0.46523628927048575665e-4,
        -0.98374475304879564677e-4,
        0.15808870322491248884e-3,
        -0.21026444172410488319e-3,
        0.21743961811521264320e-3,
        -0.16431810653676389022e-3,
        0.84418223983852743293e-4,
        -0.26190838401581408670e-4,
        0.36899182659531622704e-5,
    ]
)

_LN_SQRT_2PI = 0.91893853320467274178  # ln(sqrt(2*pi))


@jit()
def sinpi(x: float) -> float:
    """sin(pi*x) with exact argument reduction (x - round(x) is exact)."""
    n = math.floor(x + 0.5)
    f = x - n  # in [-0.5, 0.5]
    s = math.sin(math.pi * f)
    if int(n) % 2 != 0:
        s = -s
    return s


@jit()
def _lanczos_sum(z: float) -> float:
    # z >= 0.5 assumed
    s = _LANCZOS_C[0]
    for k in range(1, 15):
        s += _LANCZOS_C[k] / (z - 1.0 + k)
    return s


@jit()
def gammaln_pos(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    corr = 0.0
    if x < 0.5:
        # Gamma(x) = Gamma(x+1)/x
        corr = -math.log(x)
        x = x + 1.0
    base = x + LANCZOS_G - 0.5
    return corr + _LN_SQRT_2PI + (x - 0.5) * math.log(base) - base + math.log(_lanczos_sum(x))


@jit()
def gamma(x: float) -> float:
    """Gamma(x) on the real line; +/-inf at the poles, by approach direction of 1/Gamma."""
    if x > 0.0:
        if x > 171.62:
            return math.inf
        return math.exp(gammaln_pos(x))
    if x == math.floor(x):
        return math.inf  # pole; sign is direction-dependent, callers use rgamma
    # reflection: Gamma(x) = pi / (sin(pi x) * Gamma(1-x))
    s = sinpi(x)
    lg = math.log(math.pi / abs(s)) - gammaln_pos(1.0 - x)
    if lg > 709.0:
        return math.inf if s > 0.0 else -math.inf
    val = math.exp(lg)
    return val if s > 0.0 else -val


@jit()
def rgamma(x: float) -> float:
    """1/Gamma(x), total on the real line: 0 at non-positive integers."""
    if x > 0.0:
        return math.exp(-gammaln_pos(x))
    if x == math.floor(x):
        return 0.0
    # 1/Gamma(x) = sin(pi x) * Gamma(1-x) / pi
    s = sinpi(x)
    lg = gammaln_pos(1.0 - x) + math.log(abs(s) / math.pi)
    if lg > 709.0:
        return math.inf if s > 0.0 else -math.inf
    val = math.exp(lg)
    return val if s > 0.0 else -val
