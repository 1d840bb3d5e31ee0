"""Power-law material map: creep exponent <-> equation order <-> friction."""
import math

import pytest

from fdwave.errors import InvalidParams, OutOfRange
from fdwave.green import Kind, green_signalling_transform
from fdwave.visco import (
    MaterialParams,
    creep_compliance,
    gamma_from_q,
    green_spec,
    mu_of_s,
    order_from_creep,
    q_factor,
)


def test_creep_newtonian_fluid():
    m = MaterialParams(rho=1.0, a=1.0, gamma=1.0)
    assert creep_compliance(m, 2.0) == pytest.approx(2.0, rel=1e-15)


def test_creep_elastic_solid_is_flat():
    m = MaterialParams(rho=2.0, a=5.0, gamma=0.0)
    for t in (0.1, 1.0, 40.0):
        assert creep_compliance(m, t) == pytest.approx(0.1, rel=1e-15)


def test_creep_half_exponent():
    m = MaterialParams(rho=2.0, a=3.0, gamma=0.5)
    assert creep_compliance(m, 1.0) == pytest.approx(
        1.0 / (6.0 * math.gamma(1.5)), rel=1e-14
    )


def test_creep_monotone():
    m = MaterialParams(rho=1.0, a=1.0, gamma=0.35)
    ts = [0.2, 0.5, 1.0, 2.0, 8.0]
    vals = [creep_compliance(m, t) for t in ts]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_creep_rejects_nonpositive_time():
    m = MaterialParams(rho=1.0, a=1.0, gamma=0.5)
    for t in (0.0, -1.0, math.inf):
        with pytest.raises(InvalidParams):
            creep_compliance(m, t)


def test_order_from_creep_endpoints_and_middle():
    assert order_from_creep(1.0).beta == 1.0  # diffusion
    assert order_from_creep(0.0).beta == 2.0  # waves
    mid = order_from_creep(0.5)
    assert mid.beta == 1.5 and mid.nu == 0.75


def test_q_factor_values():
    assert q_factor(0.5) == pytest.approx(1.0, rel=1e-15)
    assert q_factor(0.25) == pytest.approx(math.tan(math.pi / 8.0), rel=1e-15)


def test_q_factor_endpoints_carry_limits():
    with pytest.raises(OutOfRange) as e0:
        q_factor(0.0)
    assert e0.value.limit == 0.0
    with pytest.raises(OutOfRange) as e1:
        q_factor(1.0)
    assert e1.value.limit == math.inf
    with pytest.raises(OutOfRange):
        q_factor(-0.1)
    with pytest.raises(OutOfRange):
        q_factor(1.5)


def test_gamma_from_q_inverts_friction_law():
    for g in (0.1, 0.5, 0.9):
        assert gamma_from_q(q_factor(g)) == pytest.approx(g, rel=1e-14)
    assert gamma_from_q(1.0) == pytest.approx(0.5, rel=1e-15)
    with pytest.raises(OutOfRange):
        gamma_from_q(0.0)
    with pytest.raises(OutOfRange):
        gamma_from_q(-2.0)


def test_quality_factor_1000_inversion():
    # a nearly elastic solid: Q = 1000 pins gamma = (2/pi) arctan(1e-3)
    g = gamma_from_q(1.0e-3)
    assert g == pytest.approx((2.0 / math.pi) * math.atan(1.0e-3), abs=1e-6)
    assert g == pytest.approx(0.64e-3, rel=1e-2)
    assert q_factor(g) == pytest.approx(1.0e-3, rel=1e-12)


def test_mu_of_s_limits():
    diff = MaterialParams(rho=1.0, a=1.0, gamma=1.0)
    assert mu_of_s(diff, 4.0) == pytest.approx(2.0, rel=1e-15)  # sqrt(s/a)
    wave = MaterialParams(rho=1.0, a=1.0, gamma=0.0)
    assert mu_of_s(wave, 3.0) == pytest.approx(3.0, rel=1e-15)  # s/c
    mid = MaterialParams(rho=1.0, a=2.0, gamma=0.5)
    assert mu_of_s(mid, 2.0) == pytest.approx(2.0**0.25, rel=1e-15)
    with pytest.raises(InvalidParams):
        mu_of_s(mid, 0.0)


def test_green_spec_bridge():
    m = MaterialParams(rho=1.0, a=2.5, gamma=0.5)
    spec = green_spec(m, Kind.SIGNALLING)
    assert spec.kind is Kind.SIGNALLING
    assert spec.a == 2.5
    assert spec.order.beta == 1.5 and spec.order.nu == 0.75
    # the transform's spatial decay rate is exactly mu(s)
    x, s = 0.7, 3.0
    assert green_signalling_transform(spec, x, s) == pytest.approx(
        math.exp(-x * mu_of_s(m, s)), rel=1e-14
    )


def test_material_params_validation():
    with pytest.raises(InvalidParams):
        MaterialParams(rho=0.0, a=1.0, gamma=0.5)
    with pytest.raises(InvalidParams):
        MaterialParams(rho=1.0, a=-2.0, gamma=0.5)
    with pytest.raises(OutOfRange):
        MaterialParams(rho=1.0, a=1.0, gamma=1.2)
    with pytest.raises(OutOfRange):
        MaterialParams(rho=1.0, a=1.0, gamma=-0.1)


def test_material_order_property():
    m = MaterialParams(rho=1.0, a=1.0, gamma=0.25)
    assert m.order.beta == 1.75 and m.order.gamma == 0.25
