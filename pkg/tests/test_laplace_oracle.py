"""Inversion-oracle tests: known transform pairs and contour self-consistency.

Reference values were frozen from a 120-digit arbitrary-precision series
evaluation (mpmath), independent of every code path exercised here.
"""
import cmath
import math

import pytest

from fdwave.errors import InvalidDomain, InvalidParams, Unstable
from fdwave.laplace_oracle import (
    ContourConfig,
    TransformFn,
    bromwich_mwright,
    talbot_invert,
)

# -- fixed-Talbot on elementary pairs ---------------------------------------------


def test_talbot_constant():
    val, est = talbot_invert(TransformFn(lambda s: 1.0 / s), 3.7)
    assert val == pytest.approx(1.0, abs=1e-10)
    assert est < 1e-9


def test_talbot_ramp():
    val, _ = talbot_invert(TransformFn(lambda s: 1.0 / s**2), 2.5)
    assert val == pytest.approx(2.5, abs=1e-10)


def test_talbot_exponential_decay():
    val, _ = talbot_invert(TransformFn(lambda s: 1.0 / (s + 2.0)), 1.5)
    assert val == pytest.approx(math.exp(-3.0), rel=1e-9)


def test_talbot_sqrt_exponential_closed_form():
    # e^(-sqrt(s))  <->  t^(-3/2) e^(-1/(4t)) / (2 sqrt(pi))
    val, est = talbot_invert(TransformFn(lambda s: cmath.exp(-cmath.sqrt(s))), 1.0)
    assert val == pytest.approx(math.exp(-0.25) / (2.0 * math.sqrt(math.pi)), rel=1e-9)
    assert est < 1e-9


def test_talbot_fractional_exponential_fixture():
    # e^(-s^0.6) at t = 2; value frozen from the 120-digit series route
    val, _ = talbot_invert(TransformFn(lambda s: cmath.exp(-s**0.6)), 2.0)
    assert val == pytest.approx(0.10084905108841849971, rel=1e-9)


def test_talbot_rejects_nonpositive_time():
    for t in (0.0, -1.0):
        with pytest.raises(InvalidDomain):
            talbot_invert(TransformFn(lambda s: 1.0 / s), t)


def test_transform_fn_carries_branch_cut_note():
    f = TransformFn(lambda s: 1.0 / s, branch_cut="none")
    assert f(2.0) == 0.5
    assert TransformFn(lambda s: s).branch_cut == "negative real axis"


# -- branch-cut contour for the density kernel -------------------------------------

# (nu, r, reference) -- 120-digit series values, incl. deep-cancellation points
CONTOUR_POINTS = [
    (0.5, 1.0, 0.43939128946772239705),
    (0.75, 3.0, 0.00035126361023134093759),
    (0.125, 30.0, 4.0558433376728845559e-15),
    (0.25, 20.0, 1.9429889447659160479e-12),
    (0.375, 12.0, 3.469210183075290807e-9),
    (0.5, 8.0, 6.3491173359332791342e-8),
    (0.625, 7.0, 4.8550862764655518011e-14),
    (0.75, 5.0, 7.0532342151839238102e-29),
]


@pytest.mark.parametrize("nu,r,ref", CONTOUR_POINTS)
def test_contour_values(nu, r, ref):
    val, est = bromwich_mwright(nu, r)
    assert val == pytest.approx(ref, rel=1e-12)
    assert abs(val - ref) <= max(est, 4.0 * abs(ref) * 2.3e-16)


def test_contour_at_origin_hits_reciprocal_gamma():
    for nu in (0.2, 0.375, 0.6, 0.8):
        val, _ = bromwich_mwright(nu, 0.0)
        assert val == pytest.approx(1.0 / math.gamma(1.0 - nu), rel=1e-13)


def test_contour_node_refinement_is_geometric():
    # the reported estimate (two-grid disagreement) must collapse fast with
    # node count, until it bottoms out at the compensated-sum roundoff floor
    ests = [
        bromwich_mwright(0.625, 2.0, ContourConfig(node_count=m))[1]
        for m in (16, 24, 32, 48)
    ]
    assert ests[0] > 30.0 * ests[1] > 900.0 * ests[2]
    assert ests[3] <= 1e-13


def test_contour_scale_invariance():
    for nu, r in ((0.625, 2.0), (0.25, 6.0)):
        base = bromwich_mwright(nu, r, ContourConfig(contour_scale=1.0))[0]
        for c in (0.8, 1.25):
            moved = bromwich_mwright(nu, r, ContourConfig(contour_scale=c))[0]
            assert abs(moved - base) <= 1e-8 * abs(base)


def test_contour_starved_nodes_raise_unstable():
    with pytest.raises(Unstable):
        bromwich_mwright(0.75, 5.0, ContourConfig(node_count=8))
    with pytest.raises(Unstable):
        talbot_invert(
            TransformFn(lambda s: cmath.exp(-s**0.6)), 2.0, ContourConfig(node_count=8)
        )


def test_contour_domain_guards():
    for nu in (0.0, 1.0, -0.2, 1.3):
        with pytest.raises(InvalidParams):
            bromwich_mwright(nu, 1.0)
    with pytest.raises(InvalidDomain):
        bromwich_mwright(0.5, -0.1)


@pytest.mark.parametrize("m", (7, 9, 15, 6, 0))
def test_config_rejects_bad_node_counts(m):
    with pytest.raises(InvalidParams):
        ContourConfig(node_count=m)


@pytest.mark.parametrize("c", (0.0, -1.0))
def test_config_rejects_bad_scale(c):
    with pytest.raises(InvalidParams):
        ContourConfig(contour_scale=c)
