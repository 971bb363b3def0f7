"""Closed-form standing-wave fields, at rest and boosted.

All field evaluators are vectorized over numpy arrays and deterministic:
the same inputs give bit-identical outputs on every call.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularityError
from .kinematics import BoostParams

__all__ = [
    "Provenance",
    "AmplitudeMode",
    "WaveField",
    "FactorPair",
    "rest_amplitude",
    "one_d_travelling",
    "boosted_closed_form",
    "generalized_closed_form",
    "factorize",
]


class Provenance(enum.Enum):
    """How a WaveField's values are produced."""

    REST = "rest"
    BOOSTED_CLOSED_FORM = "boosted-closed-form"
    ONE_D_TRAVELLING = "one-d-travelling"
    RAY_CONSTRUCTED = "ray-constructed"
    GENERALIZED_CLOSED_FORM = "generalized-closed-form"


class AmplitudeMode(enum.Enum):
    UNIT = "unit"
    INVERSE_R = "inverse-r"


def _radial(x, y, z):
    return np.sqrt(x * x + y * y + z * z)


def _envelope_phase(params: BoostParams, x, y, z, t, sa: float, sam1: float):
    # sa = gamma^a, sam1 = gamma^(a-1); shared by the closed forms and
    # factorize so their values match bit-for-bit.
    u = x - params.v * t
    return params.kappa0 * _radial(sa * u, sam1 * y, sam1 * z)


def _modulation_phase(params: BoostParams, x, t, sa: float):
    c = params.c
    return params.omega0 * (sa * (t - params.v * x / (c * c)))


def rest_amplitude(
    params: BoostParams,
    x,
    y,
    z,
    t,
    amplitude_mode: AmplitudeMode = AmplitudeMode.UNIT,
):
    r"""Rest-frame standing wave sin(kappa0 r) cos(omega0 t), r = |x, y, z|.

    With amplitude_mode = INVERSE_R the spherical 1/r envelope is applied;
    evaluation at r = 0 then raises SingularityError.
    """
    x, y, z, t = (np.asarray(q, dtype=float) for q in (x, y, z, t))
    r = _radial(x, y, z)
    val = np.sin(params.kappa0 * r) * np.cos(params.omega0 * t)
    if amplitude_mode is AmplitudeMode.INVERSE_R:
        if np.any(r == 0.0):
            raise SingularityError("inverse-r amplitude diverges at r = 0")
        val = val / r
    return val


def one_d_travelling(params: BoostParams, x, t):
    r"""One-dimensional travelling form sin(s kappa0 (x - v t)) cos(s omega0 (t - v x / c^2)).

    s = gamma^exponent_a; at exponent_a = 1 this is the familiar boosted
    profile and at beta = 0 it degenerates exactly to sin(kappa0 x) cos(omega0 t).
    """
    x, t = np.asarray(x, dtype=float), np.asarray(t, dtype=float)
    s = params.scale
    u = x - params.v * t
    return np.sin(s * params.kappa0 * u) * np.cos(_modulation_phase(params, x, t, s))


def generalized_closed_form(params: BoostParams, x, y, z, t):
    r"""Boosted standing wave under the gamma^a scale family.

    sin(kappa0 sqrt((s u)^2 + (s/gamma)^2 (y^2 + z^2))) *
    cos(s omega0 (t - v x / c^2)),   u = x - v t,  s = gamma^a.

    a = 1 gives the Lorentz-contracted ellipsoidal envelope; a = 0 leaves
    the envelope argument sqrt(u^2 + (1 - beta^2)(y^2 + z^2)) unscaled.
    """
    x, y, z, t = (np.asarray(q, dtype=float) for q in (x, y, z, t))
    g = params.gamma
    sa = g**params.exponent_a
    sam1 = g ** (params.exponent_a - 1.0)
    env = _envelope_phase(params, x, y, z, t, sa, sam1)
    mod = _modulation_phase(params, x, t, sa)
    return np.sin(env) * np.cos(mod)


def boosted_closed_form(params: BoostParams, x, y, z, t):
    r"""Lorentz-boosted standing wave.

    sin(kappa0 sqrt(gamma^2 (x - v t)^2 + y^2 + z^2)) *
    cos(gamma omega0 (t - v x / c^2))

    Requires exponent_a = 1; delegates to the generalized evaluator so the
    two agree bit-for-bit there. Substituting the inverse boost coordinates
    into rest_amplitude reproduces these values identically.
    """
    if params.exponent_a != 1.0:
        raise DomainError(
            f"boosted closed form is the exponent_a = 1 member; got {params.exponent_a!r}"
        )
    return generalized_closed_form(params, x, y, z, t)


@dataclass(frozen=True)
class FactorPair:
    """Carrier/modulation factorization of the boosted standing wave.

    carrier translates with the source at carrier_speed = v; the modulation
    phase advances at modulation_speed = c^2/v = c/beta, which diverges at
    beta = 0 and is then None. The pointwise product carrier * modulation
    reproduces the closed-form field bit-for-bit.
    """

    params: BoostParams
    carrier_speed: float
    modulation_speed: float | None

    def _scales(self) -> tuple[float, float]:
        g = self.params.gamma
        a = self.params.exponent_a
        return g**a, g ** (a - 1.0)

    def carrier_phase(self, x, y, z, t):
        """Argument of the carrier sine."""
        x, y, z, t = (np.asarray(q, dtype=float) for q in (x, y, z, t))
        sa, sam1 = self._scales()
        return _envelope_phase(self.params, x, y, z, t, sa, sam1)

    def modulation_phase(self, x, t):
        """Argument of the modulation cosine."""
        x, t = np.asarray(x, dtype=float), np.asarray(t, dtype=float)
        sa, _ = self._scales()
        return _modulation_phase(self.params, x, t, sa)

    def carrier(self, x, y, z, t):
        return np.sin(self.carrier_phase(x, y, z, t))

    def modulation(self, x, t):
        return np.cos(self.modulation_phase(x, t))


def factorize(params: BoostParams) -> FactorPair:
    """Split the closed-form field into its carrier and modulation factors."""
    if abs(params.beta) >= 1.0:
        raise DomainError(f"|beta| must be < 1, got {params.beta!r}")
    if params.beta == 0.0:
        modulation_speed = None
    else:
        modulation_speed = params.c / params.beta
    return FactorPair(
        params=params,
        carrier_speed=params.v,
        modulation_speed=modulation_speed,
    )


@dataclass(frozen=True)
class WaveField:
    """A field evaluator tagged with how its values are produced.

    The inverse-r amplitude envelope only makes sense for the rest field;
    any other combination is rejected. ray_speed (default c) only applies
    to the ray-constructed route.
    """

    params: BoostParams
    provenance: Provenance
    amplitude_mode: AmplitudeMode = AmplitudeMode.UNIT
    ray_speed: float | None = None

    def __post_init__(self) -> None:
        if (
            self.amplitude_mode is AmplitudeMode.INVERSE_R
            and self.provenance is not Provenance.REST
        ):
            raise DomainError("inverse-r amplitude is only defined for the rest field")
        if self.ray_speed is not None:
            if self.provenance is not Provenance.RAY_CONSTRUCTED:
                raise DomainError("ray_speed only applies to the ray-constructed field")
            if self.ray_speed <= abs(self.params.v):
                raise DomainError(
                    f"ray_speed must exceed |v| = {abs(self.params.v)!r}, got {self.ray_speed!r}"
                )

    def __call__(self, x, y, z, t):
        p = self.provenance
        if p is Provenance.REST:
            return rest_amplitude(self.params, x, y, z, t, self.amplitude_mode)
        if p is Provenance.BOOSTED_CLOSED_FORM:
            return boosted_closed_form(self.params, x, y, z, t)
        if p is Provenance.ONE_D_TRAVELLING:
            # y, z are ignored: the profile only depends on x and t
            return one_d_travelling(self.params, x, t)
        if p is Provenance.GENERALIZED_CLOSED_FORM:
            return generalized_closed_form(self.params, x, y, z, t)
        if p is Provenance.RAY_CONSTRUCTED:
            from .rayconstruct import interfere

            return interfere(self.params, self.ray_speed, x, y, z, t)
        raise DomainError(f"unknown provenance {p!r}")
