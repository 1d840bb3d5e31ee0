"""Cauchy / Signalling fundamental-solution tests.

Dual routes used here: closed Gaussian forms at nu = 1/2, certified
quadrature of the self-similar profile for masses and moments, and the
numeric Laplace transform of sampled time signals against the analytic
transform expressions.
"""
import math

import numpy as np
import pytest

from _quad import m_moment_quad
from fdwave.errors import (
    DistributionalLimit,
    InsufficientRange,
    InvalidDomain,
    InvalidParams,
)
from fdwave.green import (
    GreenSpec,
    Kind,
    green_cauchy,
    green_cauchy_limit_nu0,
    green_cauchy_moment,
    green_cauchy_profile,
    green_cauchy_transform,
    green_signalling,
    green_signalling_limit_nu0,
    green_signalling_signal,
    green_signalling_transform,
    reciprocity_residual,
    scale_map,
    signalling_tail_exponent,
    similarity,
)
from fdwave.orders import FractionalOrder

NUS = (0.125, 0.25, 0.375, 0.5, 0.625, 0.75)


def cauchy(nu, a=1.0):
    return GreenSpec(Kind.CAUCHY, a, FractionalOrder.from_nu(nu))


def signalling(nu, a=1.0):
    return GreenSpec(Kind.SIGNALLING, a, FractionalOrder.from_nu(nu))


# -- closed forms at nu = 1/2 --------------------------------------------------


@pytest.mark.parametrize("a,t", [(1.0, 1.0), (2.5, 0.3), (0.7, 4.0)])
def test_cauchy_half_is_heat_kernel(a, t):
    spec = cauchy(0.5, a)
    for x in np.linspace(-4.0, 4.0, 33):
        exact = math.exp(-x * x / (4.0 * a * t)) / (2.0 * math.sqrt(math.pi * a * t))
        assert green_cauchy(spec, float(x), t) == pytest.approx(exact, rel=1e-12)


@pytest.mark.parametrize("a", [1.0, 3.0])
def test_signalling_half_is_levy_smirnov(a):
    spec = signalling(0.5, a)
    x = 1.3
    for t in (0.05, 0.4, 2.0):
        exact = (
            x / (2.0 * math.sqrt(math.pi * a) * t**1.5) * math.exp(-x * x / (4.0 * a * t))
        )
        assert green_signalling(spec, x, t) == pytest.approx(exact, rel=1e-12)


def test_signalling_peak_time_half():
    # d/dt G_s = 0 at t = x^2 / (6 a) for nu = 1/2
    spec = signalling(0.5)
    t = np.linspace(0.01, 1.0, 991)
    g = green_signalling_signal(spec, 1.0, t)
    assert t[np.argmax(g)] == pytest.approx(1.0 / 6.0, abs=2e-3)


# -- structural identities -----------------------------------------------------


@pytest.mark.parametrize("nu", NUS + (0.875,))
def test_reciprocity_grid(nu):
    pair = (cauchy(nu), signalling(nu))
    worst = 0.0
    for r in np.geomspace(0.01, 3.0, 20):
        worst = max(worst, reciprocity_residual(pair, float(r), 1.0))
    assert worst <= 1e-10


def test_reciprocity_rejects_mismatched_pair():
    with pytest.raises(InvalidParams):
        reciprocity_residual((cauchy(0.5), signalling(0.25)), 1.0, 1.0)
    with pytest.raises(InvalidParams):
        reciprocity_residual((signalling(0.5), signalling(0.5)), 1.0, 1.0)


def test_cauchy_even_in_x():
    spec = cauchy(0.375)
    for x in (0.3, 1.1, 2.6):
        assert green_cauchy(spec, x, 0.7) == green_cauchy(spec, -x, 0.7)
    prof = green_cauchy_profile(spec, np.array([-1.5, 1.5]), 0.7)
    assert prof[0] == prof[1]


@pytest.mark.parametrize("nu", NUS)
def test_cauchy_unit_mass(nu):
    # integral G_c dx = integral M_nu(r) dr by the similarity substitution
    assert m_moment_quad(nu, 0) == pytest.approx(1.0, rel=1e-7)


@pytest.mark.parametrize("nu", (0.25, 0.5, 0.625))
def test_cauchy_second_moment_dual_route(nu):
    a, t = 1.7, 0.9
    spec = cauchy(nu, a)
    closed = green_cauchy_moment(spec, 1, t)
    # certified quadrature route: <x^2> = a t^(2 nu) * m_2(M)
    quad = a * t ** (2.0 * nu) * m_moment_quad(nu, 2)
    assert closed == pytest.approx(quad, rel=1e-7)
    assert closed == pytest.approx(
        2.0 * a * t ** (2.0 * nu) / math.gamma(2.0 * nu + 1.0), rel=1e-12
    )


@pytest.mark.parametrize("kind", [Kind.CAUCHY, Kind.SIGNALLING])
@pytest.mark.parametrize("p,q", [(2.0, 3.0), (0.5, 0.25), (1.3, 7.0)])
def test_scale_invariance(kind, p, q):
    nu = 0.625
    spec = GreenSpec(kind, 1.0, FractionalOrder.from_nu(nu))
    lhs, rhs = scale_map(spec, p, q, 0.8, 0.6)
    assert lhs == pytest.approx(rhs, rel=1e-11)


def test_similarity_coordinate():
    spec = cauchy(0.25, 4.0)
    pt = similarity(spec, -3.0, 16.0)
    assert pt.r == pytest.approx(3.0 / (2.0 * 2.0), rel=1e-15)
    with pytest.raises(InvalidDomain):
        similarity(spec, 1.0, 0.0)


# -- Laplace transforms --------------------------------------------------------


def test_transform_expressions():
    spec = cauchy(0.25, 1.0)
    s = 2.0
    assert green_cauchy_transform(spec, 1.5, s) == pytest.approx(
        math.exp(-1.5 * s**0.25) / (2.0 * s**0.75), rel=1e-15
    )
    ss = signalling(0.75, 4.0)
    assert green_signalling_transform(ss, 2.0, s) == pytest.approx(
        math.exp(-(2.0 / 2.0) * s**0.75), rel=1e-15
    )
    assert green_signalling_transform(ss, 0.0, s) == 1.0


@pytest.mark.parametrize("nu", (0.25, 0.5, 0.75))
@pytest.mark.parametrize("s", (0.5, 1.0, 5.0))
def test_cauchy_transform_dual_route(nu, s):
    # adaptive quadrature of t -> G_c(x, t) e^(-s t) against the analytic
    # image; the profile is evaluated through certified branches only
    # (series / contour), keeping quadrature bias below the 1e-6 contract
    from scipy.integrate import quad

    from _quad import m_certified, split_radius

    x = 0.8
    big_t = 90.0 / s  # e^(-90) kills the algebraic remainder
    # below t_floor the profile mass is < 1e-16 of the peak (same truncation
    # radius the certified mass quadrature uses)
    t_floor = (x / split_radius(nu, 38.0)) ** (1.0 / nu)

    def integrand(t):
        return m_certified(nu, x / t**nu) / (2.0 * t**nu) * math.exp(-s * t)

    num, err = quad(
        integrand, t_floor, big_t, points=[x ** (1.0 / nu), 1.0], limit=400
    )
    assert num == pytest.approx(green_cauchy_transform(cauchy(nu), x, s), rel=1e-6)


@pytest.mark.parametrize("s", (0.5, 1.0, 3.0))
def test_signalling_transform_dual_route(s):
    # uniform-grid damped trapezoid route (the packaged transform tool)
    from fdwave.fracderiv import numeric_laplace

    spec = signalling(0.5)
    x = 1.0
    dt = 1e-3
    t = np.arange(1, 60001) * dt
    g = np.empty(t.size + 1)
    g[0] = 0.0
    g[1:] = green_signalling_signal(spec, x, t)
    num = numeric_laplace(g, dt, s)
    assert num == pytest.approx(green_signalling_transform(spec, x, s), rel=1e-6)


@pytest.mark.parametrize("nu", (0.25, 0.5, 0.75))
def test_signalling_unit_time_mass(nu):
    # integral over (0, T] by adaptive quadrature (certified branches); the
    # algebraic tail beyond T equals integral_0^{r(T)} M_nu(u) du after
    # substituting u = x / t^nu
    from scipy.integrate import quad

    from _quad import m_certified, m_partial_integral, split_radius

    x, big_t = 1.0, 50.0
    t_floor = (x / split_radius(nu, 38.0)) ** (1.0 / nu)

    def integrand(t):
        return nu * x * m_certified(nu, x / t**nu) / t ** (1.0 + nu)

    head, _ = quad(integrand, t_floor, big_t, points=[0.05, 1.0], limit=400)
    tail = m_partial_integral(nu, x / big_t**nu)
    assert head + tail == pytest.approx(1.0, abs=1e-7)


# -- tails and limits ----------------------------------------------------------

TAIL_WINDOWS = [
    (0.125, 1e6, 1e8, 0.02),
    (0.25, 1e4, 1e6, 0.01),
    (0.5, 1e2, 1e4, 0.002),
    (0.75, 1e3, 1e5, 0.002),
]


@pytest.mark.parametrize("nu,t_lo,t_hi,tol", TAIL_WINDOWS)
def test_signalling_algebraic_tail(nu, t_lo, t_hi, tol):
    spec = signalling(nu)
    slope = signalling_tail_exponent(spec, 1.0, t_lo, t_hi)
    target = -(1.0 + nu)
    assert abs(slope - target) / abs(target) <= tol


def test_tail_fit_needs_two_decades():
    with pytest.raises(InsufficientRange):
        signalling_tail_exponent(signalling(0.5), 1.0, 10.0, 500.0)


def test_exponential_spatial_tail():
    # log G_c against x^(1/(1-nu)) straightens out with a negative slope
    for nu in (0.25, 0.5, 0.625):
        spec = cauchy(nu)
        x = np.geomspace(2.0, 8.0, 9)
        logg = np.log(green_cauchy_profile(spec, x, 1.0))
        u = x ** (1.0 / (1.0 - nu))
        slopes = np.diff(logg) / np.diff(u)
        assert (slopes < 0.0).all()
        # successive secant slopes settle toward a constant
        wobble = np.abs(np.diff(slopes)) / np.abs(slopes[:-1])
        assert wobble[-1] < wobble[0]
        assert wobble[-1] < 0.05


def test_limit_nu0_profiles():
    x = np.linspace(-3.0, 3.0, 41)
    np.testing.assert_allclose(green_cauchy_limit_nu0(x), 0.5 * np.exp(-np.abs(x)), rtol=1e-15)
    assert green_cauchy_limit_nu0(1.0) == pytest.approx(0.18393972058572117, rel=1e-15)
    with pytest.raises(DistributionalLimit):
        green_signalling_limit_nu0()


def test_point_values_against_contour_oracle():
    from fdwave.laplace_oracle import bromwich_mwright

    g = green_cauchy(cauchy(0.75), 1.0, 1.0)
    assert g == pytest.approx(0.5 * bromwich_mwright(0.75, 1.0)[0], abs=1e-7)
    gs = green_signalling(signalling(0.25), 1.0, 2.0)
    r = 1.0 / 2.0**0.25
    ref = 0.25 * 1.0 * bromwich_mwright(0.25, r)[0] / 2.0**1.25
    assert gs == pytest.approx(ref, abs=1e-7)


def test_wave_limit_transform_is_pure_delay():
    # the transform stays evaluable at nu = 1: exp(-x s / sqrt(a))
    spec = GreenSpec(Kind.SIGNALLING, 1.0, FractionalOrder.from_nu(1.0))
    assert green_signalling_transform(spec, 1.0, 2.0) == pytest.approx(
        math.exp(-2.0), rel=1e-15
    )


def test_wave_limit_is_distributional():
    spec = GreenSpec(Kind.CAUCHY, 1.0, FractionalOrder.from_nu(1.0))
    with pytest.raises(DistributionalLimit) as exc_info:
        green_cauchy(spec, 1.0, 1.0)
    assert "delta" in exc_info.value.description
    ss = GreenSpec(Kind.SIGNALLING, 4.0, FractionalOrder.from_nu(1.0))
    with pytest.raises(DistributionalLimit) as exc_info:
        green_signalling(ss, 1.0, 1.0)
    assert "delta(t - x/2" in exc_info.value.description


# -- guards --------------------------------------------------------------------


def test_kind_mismatch_rejected():
    with pytest.raises(InvalidParams):
        green_cauchy(signalling(0.5), 1.0, 1.0)
    with pytest.raises(InvalidParams):
        green_signalling(cauchy(0.5), 1.0, 1.0)


def test_signalling_needs_positive_station():
    spec = signalling(0.5)
    with pytest.raises(InvalidDomain):
        green_signalling(spec, 0.0, 1.0)
    with pytest.raises(InvalidDomain):
        green_signalling_signal(spec, -1.0, np.array([1.0]))
    with pytest.raises(InvalidDomain):
        green_signalling_signal(spec, 1.0, np.array([0.0, 1.0]))


def test_bad_diffusivity_rejected():
    for a in (0.0, -1.0, math.inf, math.nan):
        with pytest.raises(InvalidParams):
            GreenSpec(Kind.CAUCHY, a, FractionalOrder.from_nu(0.5))
