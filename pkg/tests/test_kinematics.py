import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wavekin import (
    BoostParams,
    DomainError,
    compose_velocities,
    de_broglie,
    doppler_pair,
    lorentz_factor,
    scale_factor,
)

betas = st.floats(min_value=-0.999999, max_value=0.999999)
# near the light cone 1-beta^2 cancels catastrophically, so identities that
# divide by it are checked on a range where double precision can support the
# stated tolerance; the guards themselves are exercised at the boundary
betas_mid = st.floats(min_value=-0.99, max_value=0.99)
betas_pos = st.floats(min_value=0.05, max_value=0.99)


def test_lorentz_factor_values():
    assert lorentz_factor(0.0) == 1.0
    assert lorentz_factor(0.6) == 1.25  # 3-4-5 triangle, exact in binary
    assert lorentz_factor(0.8) == pytest.approx(5.0 / 3.0, rel=1e-15)


def test_lorentz_factor_domain():
    for bad in (1.0, -1.0, 1.5, float("inf"), float("nan")):
        with pytest.raises(DomainError):
            lorentz_factor(bad)


@given(betas)
def test_lorentz_factor_even(beta):
    assert lorentz_factor(beta) == lorentz_factor(-beta)


def test_scale_factor_values():
    assert scale_factor(0.6, 0.0) == 1.0
    assert scale_factor(0.6, 1.0) == 1.25
    assert scale_factor(0.6, 2.0) == 1.5625
    assert scale_factor(0.6, 1.0) == lorentz_factor(0.6)


def test_scale_factor_domain():
    with pytest.raises(DomainError):
        scale_factor(1.0, 0.0)  # even the Galilean member rejects light speed
    with pytest.raises(DomainError):
        scale_factor(0.5, float("nan"))


def test_boost_params_validation():
    p = BoostParams(beta=0.6)
    assert p.kappa0 == 1.0
    assert p.v == 0.6
    assert p.gamma == 1.25
    assert p.scale == 1.25
    with pytest.raises(DomainError):
        BoostParams(beta=float("nan"))
    with pytest.raises(DomainError):
        BoostParams(beta=0.5, c=-1.0)
    with pytest.raises(DomainError):
        BoostParams(beta=0.5, omega0=0.0)
    # beta outside (-1, 1) is storable; gamma is what rejects it
    q = BoostParams(beta=1.5)
    with pytest.raises(DomainError):
        q.gamma


def test_doppler_pair_rest():
    pair = doppler_pair(BoostParams(beta=0.0, exponent_a=0.7))
    assert (pair.omega1, pair.omega2, pair.kappa1, pair.kappa2) == (1.0, 1.0, 1.0, 1.0)


def test_doppler_pair_frozen_values():
    pair = doppler_pair(BoostParams(beta=0.6))
    assert pair.omega1 == 2.0
    assert pair.omega2 == 0.5
    assert pair.kappa1 == 2.0
    assert pair.kappa2 == 0.5


@given(betas, st.floats(min_value=-3, max_value=3), st.floats(min_value=0.1, max_value=10))
@settings(max_examples=200)
def test_doppler_pair_ray_speed_ratio(beta, a, c):
    pair = doppler_pair(BoostParams(beta=beta, c=c, exponent_a=a))
    assert pair.omega1 / pair.kappa1 == pytest.approx(c, rel=1e-15)
    assert pair.omega2 / pair.kappa2 == pytest.approx(c, rel=1e-15)


@given(betas_mid)
def test_doppler_product_lorentz(beta):
    pair = doppler_pair(BoostParams(beta=beta, omega0=1.0))
    assert pair.omega1 * pair.omega2 == pytest.approx(1.0, rel=1e-12)


@given(betas_pos, st.sampled_from([0.0, 0.5, 2.0]))
def test_doppler_product_off_family(beta, a):
    # omega1*omega2 = gamma^(2a) (1 - beta^2) omega0^2, below omega0^2 unless a = 1
    pair = doppler_pair(BoostParams(beta=beta, exponent_a=a))
    g = lorentz_factor(beta)
    expected = g ** (2 * a) * (1.0 - beta * beta)
    assert pair.omega1 * pair.omega2 == pytest.approx(expected, rel=1e-12)
    assert pair.omega1 * pair.omega2 != pytest.approx(1.0, rel=1e-12)


def test_de_broglie_frozen_values():
    q = de_broglie(BoostParams(beta=0.6))
    assert q.omega_e == 1.25
    assert q.kappa_db == 0.75
    assert q.energy == 1.25
    assert q.momentum == 0.75
    assert q.phase_speed == pytest.approx(5.0 / 3.0, rel=1e-15)


def test_de_broglie_rest_divergence():
    q = de_broglie(BoostParams(beta=0.0))
    assert q.kappa_db == 0.0
    assert q.phase_speed is None  # divergent, represented explicitly


def test_de_broglie_hbar_scaling():
    q = de_broglie(BoostParams(beta=0.6, hbar=2.0))
    assert q.energy == 2.0 * q.omega_e
    assert q.momentum == 2.0 * q.kappa_db


def test_de_broglie_phase_speed_product():
    for beta in (0.1, 0.5, 0.9):
        p = BoostParams(beta=beta)
        q = de_broglie(p)
        assert q.phase_speed * p.v == pytest.approx(p.c**2, rel=1e-12)


@given(betas_pos, st.floats(min_value=0.1, max_value=10))
def test_de_broglie_speed_relation(beta, c):
    q = de_broglie(BoostParams(beta=beta, c=c))
    assert q.omega_e / q.kappa_db * beta == pytest.approx(c, rel=1e-12)


def test_compose_velocities_examples():
    assert compose_velocities(0.7, 0.0) == 0.7
    assert compose_velocities(0.5, 0.5) == 0.8
    assert compose_velocities(0.3, 1.0) == 1.0
    assert compose_velocities(0.3, -1.0) == -1.0


def test_compose_velocities_domain():
    with pytest.raises(DomainError):
        compose_velocities(1.0, 0.5)
    with pytest.raises(DomainError):
        compose_velocities(0.5, 1.2)


@given(betas, betas)
def test_compose_velocities_stays_inside(beta1, beta2):
    assert abs(compose_velocities(beta1, beta2)) < 1.0


@given(betas_mid, betas_mid, betas_mid)
@settings(max_examples=300)
def test_compose_velocities_associative(b1, b2, b3):
    left = compose_velocities(compose_velocities(b1, b2), b3)
    right = compose_velocities(b1, compose_velocities(b2, b3))
    assert left == pytest.approx(right, abs=1e-12)


def test_compose_velocities_rounding_guard():
    # near-light inputs whose quotient rounds onto 1.0 stay strictly inside
    b = math.nextafter(1.0, 0.0)
    out = compose_velocities(b, b)
    assert out < 1.0
