import math

import numpy as np
import pytest

from wavekin import (
    BoostParams,
    NoSolutionError,
    boosted_closed_form,
    envelope_scales,
    interfere,
    phase_rate,
    ray_phase_at_absorption,
    ray_phase_at_emission,
    ray_speed_config,
    rest_amplitude,
    retardation_residuals,
    retardation_times,
)
from wavekin.wavemodel import factorize


def test_static_geometry():
    p = BoostParams(beta=0.0, c=2.0)
    rt = retardation_times(p, None, 3.0, 4.0, 0.0, 1.7)
    assert rt.t1 == pytest.approx(5.0 / 2.0, rel=1e-15)
    assert rt.t2 == pytest.approx(5.0 / 2.0, rel=1e-15)


def test_on_axis_ahead():
    p = BoostParams(beta=0.6)
    x, t = 7.0, 2.5
    rt = retardation_times(p, None, x, 0.0, 0.0, t)
    assert rt.t1 == pytest.approx((x - p.v * t) / (p.c - p.v), rel=1e-12)


def test_defining_quadratic_at_point():
    p = BoostParams(beta=0.6)
    r1, r2 = retardation_residuals(p, None, 1.0, 1.0, 0.0, 0.0)
    assert r1 < 1e-12
    assert r2 < 1e-12


def test_defining_quadratic_random_points():
    rng = np.random.default_rng(23)
    for beta in (0.1, 0.6, 0.9):
        p = BoostParams(beta=beta)
        x, y, z, t = (rng.uniform(-10, 10, 10_000) for _ in range(4))
        r1, r2 = retardation_residuals(p, None, x, y, z, t)
        assert np.max(r1) < 1e-10
        assert np.max(r2) < 1e-10


def test_times_nonnegative():
    rng = np.random.default_rng(29)
    p = BoostParams(beta=0.9)
    x, y, z, t = (rng.uniform(-50, 50, 5000) for _ in range(4))
    rt = retardation_times(p, None, x, y, z, t)
    assert np.min(rt.t1) >= 0.0
    assert np.min(rt.t2) >= 0.0


def test_round_trip_sum():
    # t1 + t2 = 2 sqrt((x-vt)^2 + (1-b^2) rho^2) / (c (1-b^2)) when rays move at c
    p = BoostParams(beta=0.6)
    rng = np.random.default_rng(31)
    x, y, z, t = (rng.uniform(-10, 10, 2000) for _ in range(4))
    rt = retardation_times(p, None, x, y, z, t)
    b2 = p.beta**2
    u = x - p.v * t
    want = 2.0 * np.sqrt(u * u + (1.0 - b2) * (y * y + z * z)) / (p.c * (1.0 - b2))
    assert np.max(np.abs(rt.t1 + rt.t2 - want)) < 1e-10


def test_drift_splits_the_times():
    # sweeping a field point from behind the centre to ahead of it at fixed
    # distance lengthens the emission delay and shortens the absorption lead
    p = BoostParams(beta=0.6)
    d = 2.0
    u = np.linspace(-d, d, 21)
    rho = np.sqrt(d * d - u * u)
    rt = retardation_times(p, None, u, rho, 0.0, 0.0)
    assert np.all(np.diff(rt.t1) > 0)
    assert np.all(np.diff(rt.t2) < 0)
    # the asymmetry itself is exactly linear in the forward offset
    rt2 = retardation_times(p, None, u, 1.0, 0.0, 0.0)
    want = 2.0 * p.v * u / (p.c**2 * (1.0 - p.beta**2))
    assert np.max(np.abs((rt2.t1 - rt2.t2) - want)) < 1e-12


def test_phase_rate_values():
    assert phase_rate(BoostParams(beta=0.0)) == pytest.approx(1.0, rel=1e-15)
    # a = 1: rate = gamma w0 (1 - b^2) = w0 / gamma
    assert phase_rate(BoostParams(beta=0.6)) == pytest.approx(0.8, rel=1e-15)


def test_phase_rate_matches_centre_line():
    p = BoostParams(beta=0.6, omega0=2.0)
    pair = factorize(p)
    t0, t1 = 0.3, 1.9
    slope = (pair.modulation_phase(p.v * t1, t1) - pair.modulation_phase(p.v * t0, t0)) / (t1 - t0)
    assert slope == pytest.approx(phase_rate(p), rel=1e-12)


def test_ray_phase_forms():
    p = BoostParams(beta=0.6)
    rate = phase_rate(p)
    assert ray_phase_at_emission(p, 2.0, 0.5) == pytest.approx(rate * 1.5, rel=1e-15)
    assert ray_phase_at_absorption(p, 2.0, 0.5) == pytest.approx(rate * 2.5, rel=1e-15)


@pytest.mark.parametrize("beta", [0.1, 0.3, 0.6, 0.9, 0.99])
def test_interference_matches_closed_form(beta):
    p = BoostParams(beta=beta)
    rng = np.random.default_rng(37)
    x, y, z, t = (rng.uniform(-10, 10, 1000) for _ in range(4))
    delta = np.abs(interfere(p, None, x, y, z, t) - boosted_closed_form(p, x, y, z, t))
    assert np.max(delta) < 1e-9


def test_interference_rest_case():
    p = BoostParams(beta=0.0)
    rng = np.random.default_rng(41)
    x, y, z, t = (rng.uniform(-5, 5, 500) for _ in range(4))
    delta = np.abs(interfere(p, None, x, y, z, t) - rest_amplitude(p, x, y, z, t))
    assert np.max(delta) < 1e-12


def test_envelope_scales_examples():
    lon, tra = envelope_scales(BoostParams(beta=0.6))
    assert lon == pytest.approx(0.8, rel=1e-15)
    assert tra == pytest.approx(1.0, rel=1e-15)
    lon, tra = envelope_scales(BoostParams(beta=0.6, exponent_a=0.0))
    assert lon == pytest.approx(1.0, rel=1e-15)
    assert tra == pytest.approx(1.25, rel=1e-15)
    lon, tra = envelope_scales(BoostParams(beta=0.0, exponent_a=0.3))
    assert (lon, tra) == (1.0, 1.0)


def test_ray_speed_must_exceed_drift():
    p = BoostParams(beta=0.6)
    with pytest.raises(NoSolutionError):
        ray_speed_config(p, 0.5)
    with pytest.raises(NoSolutionError):
        ray_speed_config(p, 0.6)
    with pytest.raises(NoSolutionError):
        retardation_times(p, 0.4, 1.0, 0.0, 0.0, 0.0)


def test_ray_speed_config_gamma():
    p = BoostParams(beta=0.6)
    cfg = ray_speed_config(p, 2.0)
    assert cfg.ray_speed == 2.0
    assert cfg.gamma_c == pytest.approx(1.0 / math.sqrt(1.0 - 0.09), rel=1e-15)
    # default ray speed is c
    assert ray_speed_config(p).ray_speed == p.c


def test_fast_rays_change_the_contraction():
    # with rays at 2c the envelope's rest spacing is pi*C/omega0 and it
    # contracts by gamma_C, not gamma
    p = BoostParams(beta=0.6)
    ray_c = 2.0
    cfg = ray_speed_config(p, ray_c)
    spacing = math.pi * ray_c / (cfg.gamma_c * p.omega0)
    for n in (1, 2, 4):
        for t in (0.0, 0.7):
            val = interfere(p, ray_c, p.v * t + n * spacing, 0.0, 0.0, t)
            assert abs(val) < 1e-10
    # the standard-gamma spacing does not sit on a node
    wrong = math.pi * ray_c / (p.gamma * p.omega0)
    assert abs(interfere(p, ray_c, wrong, 0.0, 0.0, 0.3)) > 1e-3
    lon, tra = envelope_scales(p, 2.0)
    assert lon == pytest.approx(1.0 / cfg.gamma_c, rel=1e-15)
    assert lon != pytest.approx(1.0 / p.gamma, rel=1e-2)
