"""Self-verification suites: dual-route equivalence, speeds, detectability, quantization.

Each suite runs seeded, returns a JSON-serializable report, and never
weakens a tolerance to pass: tolerances here are the package's published
accuracy claims.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from ..analysis import (
    FrontTarget,
    bohr_path_integral,
    bohr_residual,
    decompose_loop_phase,
    group_closure_defect,
    isotropy_search,
    reexpress_pair,
    track_front,
)
from ..errors import ConfigError
from ..kinematics import BoostParams, doppler_pair
from ..rayconstruct import interfere
from ..wavemodel import boosted_closed_form, factorize, generalized_closed_form, one_d_travelling

__all__ = ["DEFAULT_SEED", "SUITE_NAMES", "run_verification", "write_report"]

DEFAULT_SEED = 20260819
SUITE_NAMES = ("detectability", "equivalence", "quantization", "speeds")

TWO_PI = 2.0 * math.pi


def _check(name: str, measured: float, tolerance: float, comparison: str = "<") -> dict:
    if comparison == "<":
        passed = measured < tolerance
    elif comparison == ">":
        passed = measured > tolerance
    else:
        raise ValueError(f"bad comparison {comparison!r}")
    return {
        "name": name,
        "measured": float(measured),
        "tolerance": float(tolerance),
        "comparison": comparison,
        "passed": bool(passed),
    }


def _suite_equivalence(seed: int) -> list[dict]:
    rng = np.random.default_rng(seed)
    checks = []
    for beta in (0.1, 0.3, 0.6, 0.9, 0.99):
        params = BoostParams(beta=beta)
        x, y, z, t = (rng.uniform(-10.0, 10.0, 1000) for _ in range(4))
        delta = np.max(np.abs(interfere(params, None, x, y, z, t) - boosted_closed_form(params, x, y, z, t)))
        checks.append(_check(f"ray-vs-closed-form beta={beta}", float(delta), 1e-9))
    for a in (0.0, 0.5, 2.0):
        params = BoostParams(beta=0.6, exponent_a=a)
        x, y, z, t = (rng.uniform(-10.0, 10.0, 1000) for _ in range(4))
        delta = np.max(
            np.abs(interfere(params, None, x, y, z, t) - generalized_closed_form(params, x, y, z, t))
        )
        checks.append(_check(f"ray-vs-generalized a={a}", float(delta), 1e-9))
    # independent 1D route: complex ray pair vs the travelling product form
    params = BoostParams(beta=0.6)
    pair = doppler_pair(params)
    x = np.linspace(-10.0, 10.0, 1000)
    t = 0.7
    complex_route = -(
        (
            np.exp(1j * (pair.omega1 * t - pair.kappa1 * x))
            - np.exp(1j * (pair.omega2 * t + pair.kappa2 * x))
        )
        / 2.0
    ).imag
    delta = np.max(np.abs(complex_route - one_d_travelling(params, x, t)))
    checks.append(_check("one-d-routes beta=0.6", float(delta), 1e-12))
    return checks


def _suite_speeds(seed: int) -> list[dict]:
    checks = []
    for beta in (0.1, 0.5, 0.9):
        params = BoostParams(beta=beta)
        pair = factorize(params)
        c2_over_v = params.c * params.c / params.v
        # windows sized from the factor spacings so a whole trajectory fits
        node_spacing = math.pi / (params.gamma * params.kappa0)
        wavelength = TWO_PI * params.c**2 / (params.gamma * params.omega0 * params.v)
        carrier = track_front(
            pair, (0.0, 4.0 * node_spacing + params.v), (0.0, 1.0), FrontTarget.CARRIER_NODE
        )
        modulation = track_front(
            pair, (0.0, 4.0 * wavelength + c2_over_v), (0.0, 1.0), FrontTarget.MODULATION_CREST
        )
        checks.append(
            _check(
                f"carrier-speed beta={beta}",
                abs(carrier.fitted_speed - params.v) / abs(params.v),
                1e-6,
            )
        )
        checks.append(
            _check(
                f"modulation-speed beta={beta}",
                abs(modulation.fitted_speed - c2_over_v) / abs(c2_over_v),
                1e-6,
            )
        )
        checks.append(
            _check(
                f"speed-product beta={beta}",
                abs(carrier.fitted_speed * modulation.fitted_speed - params.c**2) / params.c**2,
                1e-5,
            )
        )
        checks.append(_check(f"carrier-fit-residual beta={beta}", carrier.fit_residual, 1e-8))
    return checks


def _suite_detectability(seed: int) -> list[dict]:
    checks = [_check("closure-defect a=1", group_closure_defect(1.0, 0.5, 0.5), 1e-12)]
    for a in (0.0, 0.5, 2.0):
        checks.append(
            _check(f"closure-defect a={a}", group_closure_defect(a, 0.5, 0.5), 1e-3, ">")
        )
    for a in (0.0, 0.5, 1.0, 2.0):
        params = BoostParams(beta=0.6, exponent_a=a)
        pair = doppler_pair(params)
        star = isotropy_search(pair.omega1, pair.omega2, params)
        checks.append(_check(f"isotropy-roundtrip a={a}", abs(star - 0.6), 1e-10))
    # only the a=1 member hides the boost: re-expressed pair returns to omega0
    params = BoostParams(beta=0.6, exponent_a=1.0)
    pair = doppler_pair(params)
    fwd, rear = reexpress_pair(pair.omega1, pair.omega2, 0.6, 1.0)
    checks.append(
        _check("reexpressed-frequency a=1", max(abs(fwd - 1.0), abs(rear - 1.0)), 1e-12)
    )
    params = BoostParams(beta=0.6, exponent_a=0.0)
    pair = doppler_pair(params)
    fwd, rear = reexpress_pair(pair.omega1, pair.omega2, 0.6, 0.0)
    checks.append(_check("reexpressed-shift a=0", abs(fwd - 1.0), 1e-2, ">"))
    return checks


def _suite_quantization(seed: int) -> list[dict]:
    checks = []

    def circle_loop(radius: float, kappa: float, n_seg: int) -> float:
        theta = np.linspace(0.0, TWO_PI, n_seg + 1)
        circle = np.stack([radius * np.cos(theta), radius * np.sin(theta)], axis=1)
        return bohr_path_integral(circle, kappa).loop_phase

    kappa, radius = 0.75, 0.1
    exact = bohr_residual(kappa, TWO_PI * radius).loop_phase
    checks.append(
        _check("circle-convergence N=1e4", abs(circle_loop(radius, kappa, 10**4) - exact), 1e-8)
    )
    # inscribed-polygon deficit shrinks as (pi/N)^2/8 per doubling; N = 1e5
    # is where a doubling moves this loop phase by less than 1e-10
    delta = abs(circle_loop(radius, kappa, 2 * 10**5) - circle_loop(radius, kappa, 10**5))
    checks.append(_check("circle-density-doubling N=1e5", delta, 1e-10))
    result = bohr_residual(1.0, 2.0 * TWO_PI)  # loop phase exactly 4 pi
    checks.append(
        _check(
            "exact-quantization 4pi",
            abs(result.residual) + abs(result.nearest_n - 2),
            1e-300,
        )
    )
    rng = np.random.default_rng(seed)
    phases = rng.uniform(0.0, 400.0, 1000)
    failures = sum(
        1
        for lp in phases
        if TWO_PI * (r := decompose_loop_phase(float(lp))).nearest_n + r.residual != float(lp)
    )
    checks.append(_check("reconstruction-bit-exact", float(failures), 0.5))
    return checks


_SUITES = {
    "equivalence": _suite_equivalence,
    "speeds": _suite_speeds,
    "detectability": _suite_detectability,
    "quantization": _suite_quantization,
}


def run_verification(suites=("all",), seed: int = DEFAULT_SEED) -> dict:
    """Run the named suites (or all) and merge their reports deterministically."""
    names: list[str] = []
    for name in suites:
        if name == "all":
            names.extend(SUITE_NAMES)
        elif name in _SUITES:
            names.append(name)
        else:
            raise ConfigError(
                f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)} or all"
            )
    merged = []
    for name in sorted(set(names)):
        checks = _SUITES[name](seed)
        merged.append(
            {"suite": name, "passed": all(c["passed"] for c in checks), "checks": checks}
        )
    return {
        "passed": all(s["passed"] for s in merged),
        "seed": seed,
        "suites": merged,
    }


def write_report(report: dict, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(json.dumps(report, indent=1) + "\n")
    return path
