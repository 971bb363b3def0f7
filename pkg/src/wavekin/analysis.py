"""Measurement tooling: front tracking, preferred-frame diagnostics, loop quantization.

Everything here measures fields the way an instrument would (root finding on
sampled factors, fitted trajectories) so the closed forms and the ray route
can be checked against each other without sharing code paths.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import (
    DegenerateFitError,
    DomainError,
    FeatureNotFoundError,
    NoSolutionError,
    OpenPathError,
    TooFewSamplesError,
)
from .kinematics import BoostParams, compose_velocities, doppler_pair, scale_factor
from .rayconstruct import phase_rate, ray_speed_config, retardation_times
from .wavemodel import FactorPair

__all__ = [
    "FrontTarget",
    "FrontTrace",
    "DetectabilityReport",
    "QuantizationResult",
    "ANISOTROPY_TOLERANCE",
    "find_sign_changes",
    "track_front",
    "measured_modulation_wavenumber",
    "measured_modulation_frequency",
    "measured_envelope_spacing",
    "dephasing",
    "isotropy_search",
    "reexpress_pair",
    "group_closure_defect",
    "detectability_report",
    "bohr_path_integral",
    "bohr_residual",
    "decompose_loop_phase",
]

TWO_PI = 2.0 * math.pi

# closure defects above this are reported as a detectable anisotropy
ANISOTROPY_TOLERANCE = 1e-9

_BRENT_XTOL = 1e-15
_BRENT_RTOL = 8.881784197001252e-16  # 4 * eps, the minimum brentq accepts


class FrontTarget(enum.Enum):
    CARRIER_NODE = "carrier-node"
    MODULATION_CREST = "modulation-crest"


@dataclass(frozen=True)
class FrontTrace:
    """Positions of one tracked feature over time and the fitted straight line."""

    times: np.ndarray
    positions: np.ndarray
    fitted_speed: float
    fit_residual: float


@dataclass(frozen=True)
class DetectabilityReport:
    """Preferred-frame diagnostics for one transform exponent."""

    exponent_a: float
    closure_defect: float
    isotropy_frame_beta: float
    anisotropy_flag: bool


@dataclass(frozen=True)
class QuantizationResult:
    """Loop phase split as 2 pi n + residual, reconstructing bit-exactly."""

    loop_phase: float
    nearest_n: int
    residual: float


def find_sign_changes(f, lo: float, hi: float, samples: int = 257) -> np.ndarray:
    """All roots of f in [lo, hi] located by coarse sign scan plus Brent refinement.

    The scan must be finer than half the shortest oscillation of f or roots
    will be missed; callers size the window accordingly.
    """
    if samples < 3:
        raise TooFewSamplesError(f"need at least 3 scan samples, got {samples}")
    xs = np.linspace(lo, hi, samples)
    vals = np.array([float(f(x)) for x in xs])
    roots = []
    for i in range(len(xs) - 1):
        if vals[i] == 0.0:
            roots.append(xs[i])
        elif vals[i] * vals[i + 1] < 0.0:
            roots.append(brentq(f, xs[i], xs[i + 1], xtol=_BRENT_XTOL, rtol=_BRENT_RTOL))
    if vals[-1] == 0.0:
        roots.append(xs[-1])
    return np.array(roots)


def _feasible_indices(offset_lo: float, offset_hi: float, spacing: float):
    # integer n with n*spacing in [offset_lo, offset_hi]; empty range possible
    n_min = math.ceil(offset_lo / spacing)
    n_max = math.floor(offset_hi / spacing)
    return n_min, n_max


def _pick_index(n_min: int, n_max: int, exclude_zero: bool) -> int | None:
    if n_min > n_max:
        return None
    candidates = range(n_min, n_max + 1)
    best = None
    for n in candidates:
        if exclude_zero and n == 0:
            continue
        if best is None or abs(n) < abs(best) or (abs(n) == abs(best) and n > best):
            best = n
    return best


def track_front(
    pair: FactorPair,
    axis_window: tuple[float, float],
    t_window: tuple[float, float],
    target: FrontTarget,
    num_times: int = 33,
) -> FrontTrace:
    """Follow one feature of a factor along x through time and fit its speed.

    target CARRIER_NODE follows a zero of the carrier factor (travels at v);
    MODULATION_CREST follows a maximum of the modulation factor, located as
    a zero of the phase's sine (travels at c^2/v, undefined at beta = 0).
    The feature is chosen so its whole trajectory, with bracketing margins,
    stays inside axis_window; if none fits, FeatureNotFoundError. Bisection
    brackets come from the analytic factor's known spacing, so each position
    is a genuine root solve, not a formula evaluation.
    """
    params = pair.params
    lo, hi = float(axis_window[0]), float(axis_window[1])
    t0, t1 = float(t_window[0]), float(t_window[1])
    if not (lo < hi and t0 < t1):
        raise DomainError("windows must be nonempty intervals (lo < hi)")
    if num_times < 3:
        raise DegenerateFitError(f"need at least 3 time samples to fit, got {num_times}")
    times = np.linspace(t0, t1, num_times)
    v = params.v
    s = params.scale

    if target is FrontTarget.CARRIER_NODE:
        spacing = math.pi / (s * params.kappa0)
        half = 0.5 * spacing
        # node n sits at v*t + n*spacing; keep bracket inside the window
        n_min, n_max = _feasible_indices(
            lo + half - min(v * t0, v * t1), hi - half - max(v * t0, v * t1), spacing
        )
        n = _pick_index(n_min, n_max, exclude_zero=True)
        if n is None:
            raise FeatureNotFoundError(
                "no carrier node trajectory fits inside the axis window over the time window"
            )

        def predicted(t: float) -> float:
            return v * t + n * spacing

        def g(x: float, t: float) -> float:
            return float(pair.carrier(x, 0.0, 0.0, t))

    else:
        if params.beta == 0.0:
            raise FeatureNotFoundError(
                "modulation is spatially uniform at beta = 0; no crest to track"
            )
        spacing = TWO_PI * params.c * params.c / (s * params.omega0 * abs(v))
        half = 0.25 * spacing
        w = params.c * params.c / v  # crest speed
        n_min, n_max = _feasible_indices(
            lo + half - min(w * t0, w * t1), hi - half - max(w * t0, w * t1), spacing
        )
        n = _pick_index(n_min, n_max, exclude_zero=False)
        if n is None:
            raise FeatureNotFoundError(
                "no modulation crest trajectory fits inside the axis window over the time window"
            )

        def predicted(t: float) -> float:
            return w * t + n * spacing

        def g(x: float, t: float) -> float:
            return float(np.sin(pair.modulation_phase(x, t)))

    positions = np.empty_like(times)
    for i, t in enumerate(times):
        x_pred = predicted(float(t))
        positions[i] = brentq(
            g, x_pred - half, x_pred + half, args=(float(t),), xtol=_BRENT_XTOL, rtol=_BRENT_RTOL
        )
    coeffs = np.polyfit(times, positions, 1)
    resid = float(np.sqrt(np.mean((positions - np.polyval(coeffs, times)) ** 2)))
    if not math.isfinite(coeffs[0]):
        raise DegenerateFitError("trajectory fit produced a non-finite speed")
    return FrontTrace(
        times=times, positions=positions, fitted_speed=float(coeffs[0]), fit_residual=resid
    )


def measured_modulation_wavenumber(pair: FactorPair, t: float = 0.0, cycles: float = 3.2) -> float:
    """Wavenumber from the spacing of equal-time zeros of the modulation factor.

    Returns pi / (mean zero spacing along x at fixed t). The analytic
    wavelength only sizes the scan window; the zeros themselves are measured.
    """
    params = pair.params
    if params.beta == 0.0:
        raise FeatureNotFoundError("modulation has no equal-time zeros at beta = 0")
    wavelength = TWO_PI * params.c * params.c / (params.scale * params.omega0 * abs(params.v))
    roots = find_sign_changes(
        lambda x: float(pair.modulation(x, t)), 0.0, cycles * wavelength, samples=257
    )
    if len(roots) < 2:
        raise FeatureNotFoundError("fewer than two modulation zeros in the scan window")
    return math.pi / float(np.mean(np.diff(roots)))


def measured_modulation_frequency(pair: FactorPair, x: float = 0.0, cycles: float = 3.2) -> float:
    """Angular frequency from zero spacings of the modulation factor in time at fixed x."""
    params = pair.params
    period = TWO_PI / (params.scale * params.omega0)
    roots = find_sign_changes(
        lambda t: float(pair.modulation(x, t)), 0.0, cycles * period, samples=257
    )
    if len(roots) < 2:
        raise FeatureNotFoundError("fewer than two modulation zeros in the scan window")
    return math.pi / float(np.mean(np.diff(roots)))


def measured_envelope_spacing(
    params: BoostParams,
    ray_speed: float | None = None,
    axis: str = "x",
    t: float = 0.0,
) -> float:
    """Envelope node spacing measured from the interference route.

    The envelope argument is extracted as rate * (t1 + t2) / 2 with the
    retardation times solved numerically point by point, then its zeros are
    located along the chosen axis ('x' longitudinal, 'y' transverse). This
    is the dual-source observable that envelope_scales predicts.
    """
    cfg = ray_speed_config(params, ray_speed)
    rate = phase_rate(params, cfg.ray_speed)
    v = params.v

    if axis == "x":
        def arg(q: float) -> float:
            times = retardation_times(params, cfg.ray_speed, v * t + q, 0.0, 0.0, t)
            return math.sin(rate * float(times.t1 + times.t2) / 2.0)
    elif axis == "y":
        def arg(q: float) -> float:
            times = retardation_times(params, cfg.ray_speed, v * t, q, 0.0, t)
            return math.sin(rate * float(times.t1 + times.t2) / 2.0)
    else:
        raise DomainError(f"axis must be 'x' or 'y', got {axis!r}")

    # rest construction at this ray speed has node spacing pi * C / omega0;
    # the analytic scale only sizes the scan window, never the roots
    rest_spacing = math.pi * cfg.ray_speed / params.omega0
    a = params.exponent_a
    expected = rest_spacing * (cfg.gamma_c ** (-a) if axis == "x" else cfg.gamma_c ** (1.0 - a))
    roots = find_sign_changes(arg, 0.0, 4.0 * expected, samples=257)
    if len(roots) < 2:
        raise FeatureNotFoundError("fewer than two envelope nodes in the scan window")
    return float(np.mean(np.diff(roots)))


def dephasing(params: BoostParams, dx: float) -> float:
    r"""Modulation phase lag s * omega0 * v * dx / c^2 across a longitudinal offset dx.

    Equals the difference of the modulation cosine arguments at x and x + dx;
    s = gamma at exponent_a = 1. Linear in dx, zero at beta = 0.
    """
    c = params.c
    return params.scale * params.omega0 * params.v * dx / (c * c)


def isotropy_search(omega_forward: float, omega_rearward: float, params: BoostParams) -> float:
    """Velocity beta* of the frame in which the ray pair looks isotropic.

    Solves omega_forward * (1 - b) = omega_rearward * (1 + b) by bisection;
    the balance condition is independent of the transform exponent (the
    common gamma_b^a factor cancels), so the same search serves every member
    of the family. For a pair produced by doppler_pair this recovers
    params.beta. Whether the re-expressed common frequency equals omega0 is
    a separate, exponent-sensitive question; see reexpress_pair.
    """
    for name, val in (("omega_forward", omega_forward), ("omega_rearward", omega_rearward)):
        if not (math.isfinite(val) and val > 0.0):
            raise DomainError(f"{name} must be finite and positive, got {val!r}")

    def balance(b: float) -> float:
        return omega_forward * (1.0 - b) - omega_rearward * (1.0 + b)

    edge = 1.0 - 1e-15
    if not balance(-edge) > 0.0 > balance(edge):
        raise NoSolutionError("no |beta| < 1 equalizes this ray pair")
    return float(brentq(balance, -edge, edge, xtol=_BRENT_XTOL, rtol=_BRENT_RTOL))


def reexpress_pair(
    omega_forward: float, omega_rearward: float, beta: float, exponent_a: float = 1.0
) -> tuple[float, float]:
    """Frequencies of the ray pair re-expressed in a frame moving at beta.

    Applies the inverse a-family map: forward scales by s (1 - beta), rearward
    by s (1 + beta), s = gamma^a. At exponent_a = 1 a doppler_pair re-expressed
    at its own beta returns (omega0, omega0); at other exponents the common
    value differs from omega0, which is what makes the family detectable.
    """
    s = scale_factor(beta, exponent_a)
    return s * omega_forward * (1.0 - beta), s * omega_rearward * (1.0 + beta)


def _apply_family_map(
    omega_forward: float, omega_rearward: float, beta: float, exponent_a: float
) -> tuple[float, float]:
    s = scale_factor(beta, exponent_a)
    return s * omega_forward * (1.0 + beta), s * omega_rearward * (1.0 - beta)


def group_closure_defect(exponent_a: float, beta1: float, beta2: float) -> float:
    """Relative mismatch between two successive family maps and the composed one.

    Applies the frequency map at beta1 then beta2 to a unit ray pair, and
    compares with the single map at compose_velocities(beta1, beta2). The
    defect vanishes (to rounding) only at exponent_a = 1; any other exponent
    leaves a finite mismatch, the signature of a preferred frame.
    """
    step = _apply_family_map(*_apply_family_map(1.0, 1.0, beta1, exponent_a), beta2, exponent_a)
    direct = _apply_family_map(1.0, 1.0, compose_velocities(beta1, beta2), exponent_a)
    return max(abs(step[0] / direct[0] - 1.0), abs(step[1] / direct[1] - 1.0))


def detectability_report(
    params: BoostParams, beta1: float = 0.5, beta2: float = 0.5
) -> DetectabilityReport:
    """Closure defect plus isotropy-frame recovery for params' exponent.

    anisotropy_flag is True when the closure defect exceeds
    ANISOTROPY_TOLERANCE, i.e. when boosts fail to compose and the family
    member admits a detectable preferred frame.
    """
    defect = group_closure_defect(params.exponent_a, beta1, beta2)
    pair = doppler_pair(params)
    beta_star = isotropy_search(pair.omega1, pair.omega2, params)
    return DetectabilityReport(
        exponent_a=params.exponent_a,
        closure_defect=defect,
        isotropy_frame_beta=beta_star,
        anisotropy_flag=bool(defect > ANISOTROPY_TOLERANCE),
    )


def bohr_path_integral(path: np.ndarray, kappa) -> QuantizationResult:
    """Trapezoid loop integral of a wavenumber profile along a closed polyline.

    path: (N, d) vertex array, first and last points equal within 1e-12
    (OpenPathError otherwise); N >= 3 (TooFewSamplesError otherwise).
    kappa: scalar or per-vertex array of nonnegative wavenumbers. The loop
    phase is decomposed exactly like bohr_residual.
    """
    path = np.asarray(path, dtype=float)
    if path.ndim == 1:
        path = path[:, np.newaxis]
    if path.ndim != 2:
        raise DomainError(f"path must be an (N, d) array, got shape {path.shape}")
    n = path.shape[0]
    if n < 3:
        raise TooFewSamplesError(f"a closed path needs at least 3 vertices, got {n}")
    gap = float(np.linalg.norm(path[0] - path[-1]))
    if gap > 1e-12:
        raise OpenPathError(f"path endpoints differ by {gap:.3e} (> 1e-12); not a loop")
    kappa = np.asarray(kappa, dtype=float)
    if kappa.ndim == 0:
        kappa = np.full(n, float(kappa))
    if kappa.shape != (n,):
        raise DomainError(f"kappa must be scalar or shape ({n},), got {kappa.shape}")
    if np.any(kappa < 0.0) or not np.all(np.isfinite(kappa)):
        raise DomainError("kappa values must be finite and nonnegative")
    seg = np.linalg.norm(np.diff(path, axis=0), axis=1)
    loop_phase = float(np.sum(0.5 * (kappa[:-1] + kappa[1:]) * seg))
    return decompose_loop_phase(loop_phase)


def decompose_loop_phase(loop_phase: float) -> QuantizationResult:
    """Split loop_phase as 2 pi n + residual with n the nearest integer.

    Exact half-integer ties round to the larger n, so the residual lands in
    [-pi, pi). The reconstruction 2 pi n + residual == loop_phase is exact
    in floating point (the subtraction is lossless for every n).
    """
    if not math.isfinite(loop_phase) or loop_phase < 0.0:
        raise DomainError(f"loop phase must be finite and nonnegative, got {loop_phase!r}")
    n = int(math.floor(loop_phase / TWO_PI + 0.5))
    residual = loop_phase - TWO_PI * n
    return QuantizationResult(loop_phase=loop_phase, nearest_n=n, residual=residual)


def bohr_residual(kappa_db: float, path_length: float) -> QuantizationResult:
    """Quantization mismatch of a constant-wavenumber loop of given length."""
    if not (math.isfinite(kappa_db) and kappa_db >= 0.0):
        raise DomainError(f"kappa_db must be finite and nonnegative, got {kappa_db!r}")
    if not (math.isfinite(path_length) and path_length > 0.0):
        raise DomainError(f"path_length must be finite and positive, got {path_length!r}")
    return decompose_loop_phase(kappa_db * path_length)
