"""Boost kinematics: Lorentz factors, Doppler ray pairs, de Broglie quantities.

Natural units by default: c = 1, omega0 = 1, hbar = 1. Velocities are stored
as the dimensionless ratio beta = v/c.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "BoostParams",
    "RayPair",
    "DeBroglieQuantities",
    "lorentz_factor",
    "scale_factor",
    "doppler_pair",
    "de_broglie",
    "compose_velocities",
]


def lorentz_factor(beta: float) -> float:
    r"""gamma = (1 - beta^2)^(-1/2).

    Even in beta. Raises DomainError for |beta| >= 1.
    """
    if not math.isfinite(beta):
        raise DomainError(f"beta must be finite, got {beta!r}")
    if abs(beta) >= 1.0:
        raise DomainError(f"|beta| must be < 1 for a finite factor, got {beta!r}")
    return (1.0 - beta * beta) ** -0.5


def scale_factor(beta: float, exponent_a: float = 1.0) -> float:
    r"""gamma^a, the frequency scale of the generalized transform family.

    a = 1 is the Lorentz scaling, a = 0 the Galilean (scale 1). Any real
    exponent is accepted; |beta| >= 1 raises DomainError regardless of a.
    """
    if not math.isfinite(exponent_a):
        raise DomainError(f"exponent_a must be finite, got {exponent_a!r}")
    return lorentz_factor(beta) ** exponent_a


@dataclass(frozen=True)
class BoostParams:
    """Boost configuration shared by every field construction.

    beta may be any finite real at construction; operations that need a
    finite gamma raise DomainError when |beta| >= 1.
    """

    beta: float
    c: float = 1.0
    omega0: float = 1.0
    exponent_a: float = 1.0
    hbar: float = 1.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.beta):
            raise DomainError(f"beta must be finite, got {self.beta!r}")
        for name in ("c", "omega0", "hbar"):
            val = getattr(self, name)
            if not (math.isfinite(val) and val > 0.0):
                raise DomainError(f"{name} must be finite and positive, got {val!r}")
        if not math.isfinite(self.exponent_a):
            raise DomainError(f"exponent_a must be finite, got {self.exponent_a!r}")

    @property
    def kappa0(self) -> float:
        """Rest wavenumber omega0 / c."""
        return self.omega0 / self.c

    @property
    def v(self) -> float:
        """Boost speed beta * c."""
        return self.beta * self.c

    @property
    def gamma(self) -> float:
        return lorentz_factor(self.beta)

    @property
    def scale(self) -> float:
        """gamma**exponent_a. Bit-equal to gamma at exponent_a = 1."""
        return scale_factor(self.beta, self.exponent_a)


@dataclass(frozen=True)
class RayPair:
    """Forward/rearward ray frequencies and wavenumbers seen from a boosted source.

    Both rays propagate at c: omega_i / kappa_i == c.
    """

    omega1: float  # forward (along the motion)
    omega2: float  # rearward
    kappa1: float
    kappa2: float


@dataclass(frozen=True)
class DeBroglieQuantities:
    """Energy/momentum frequencies of the boosted standing wave.

    phase_speed is None at beta = 0: the modulation phase velocity c/beta
    diverges there and is represented explicitly, not as float('inf').
    """

    omega_e: float
    kappa_db: float
    energy: float
    momentum: float
    phase_speed: float | None


def doppler_pair(params: BoostParams) -> RayPair:
    r"""Frequencies of the counter-propagating ray pair.

    omega1 = s * omega0 * (1 + beta), omega2 = s * omega0 * (1 - beta),
    with s = gamma^a. At a = 1 the product omega1 * omega2 = omega0^2.
    """
    s = scale_factor(params.beta, params.exponent_a)
    omega1 = s * params.omega0 * (1.0 + params.beta)
    omega2 = s * params.omega0 * (1.0 - params.beta)
    return RayPair(omega1, omega2, omega1 / params.c, omega2 / params.c)


def de_broglie(params: BoostParams) -> DeBroglieQuantities:
    r"""Modulation frequency gamma*omega0, wavenumber gamma*kappa0*beta, and
    the hbar-scaled energy/momentum they carry.

    phase_speed = omega_e / kappa_db = c / beta, divergent (None) at beta = 0.
    """
    g = lorentz_factor(params.beta)
    omega_e = g * params.omega0
    kappa_db = g * params.kappa0 * params.beta
    phase_speed = None if params.beta == 0.0 else params.c / params.beta
    return DeBroglieQuantities(
        omega_e=omega_e,
        kappa_db=kappa_db,
        energy=params.hbar * omega_e,
        momentum=params.hbar * kappa_db,
        phase_speed=phase_speed,
    )


def compose_velocities(beta1: float, beta2: float) -> float:
    r"""Collinear velocity composition (beta1 + beta2) / (1 + beta1*beta2).

    Requires |beta1| < 1 and |beta2| <= 1; returns +-1 only when beta2 is
    exactly +-1 (light speed is a fixed point). The result never leaves
    (-1, 1) for inputs inside it; a post-rounding guard nudges the rare
    division that rounds onto +-1 back to the nearest interior double.
    """
    if not (math.isfinite(beta1) and math.isfinite(beta2)):
        raise DomainError("velocities must be finite")
    if abs(beta1) >= 1.0:
        raise DomainError(f"|beta1| must be < 1, got {beta1!r}")
    if abs(beta2) > 1.0:
        raise DomainError(f"|beta2| must be <= 1, got {beta2!r}")
    if abs(beta2) == 1.0:
        return math.copysign(1.0, beta2)
    out = (beta1 + beta2) / (1.0 + beta1 * beta2)
    if abs(out) >= 1.0:
        # mathematically |out| < 1; the division rounded onto the boundary
        out = math.copysign(math.nextafter(1.0, 0.0), out)
    return out
