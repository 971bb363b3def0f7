"""wavekin: standing-wave kinematics under boosts.

A moving standing wave factors into a carrier travelling with the source at
v and a modulation whose phase sweeps at c^2/v. The package builds that
field three independent ways (closed form, coordinate substitution, and a
dual-source ray construction with no transformation anywhere in it), then
provides the measurement tooling to check they agree and to quantify how a
generalized gamma^a transform family betrays a preferred frame whenever
a != 1.
"""

from .analysis import (
    ANISOTROPY_TOLERANCE,
    DetectabilityReport,
    FrontTarget,
    FrontTrace,
    QuantizationResult,
    bohr_path_integral,
    bohr_residual,
    decompose_loop_phase,
    dephasing,
    detectability_report,
    find_sign_changes,
    group_closure_defect,
    isotropy_search,
    measured_envelope_spacing,
    measured_modulation_frequency,
    measured_modulation_wavenumber,
    reexpress_pair,
    track_front,
)
from .errors import (
    ConfigError,
    DegenerateFitError,
    DomainError,
    FeatureNotFoundError,
    GridDimensionError,
    NoSolutionError,
    OpenPathError,
    SingularityError,
    TooFewSamplesError,
    WavekinError,
)
from .kinematics import (
    BoostParams,
    DeBroglieQuantities,
    RayPair,
    compose_velocities,
    de_broglie,
    doppler_pair,
    lorentz_factor,
    scale_factor,
)
from .rayconstruct import (
    RaySpeedConfig,
    RetardationTimes,
    envelope_scales,
    interfere,
    phase_rate,
    ray_field,
    ray_phase_at_absorption,
    ray_phase_at_emission,
    ray_speed_config,
    retardation_residuals,
    retardation_times,
)
from .wavemodel import (
    AmplitudeMode,
    FactorPair,
    Provenance,
    WaveField,
    boosted_closed_form,
    factorize,
    generalized_closed_form,
    one_d_travelling,
    rest_amplitude,
)

__version__ = "0.1.0"

__all__ = [
    "ANISOTROPY_TOLERANCE",
    "AmplitudeMode",
    "BoostParams",
    "ConfigError",
    "DeBroglieQuantities",
    "DegenerateFitError",
    "DetectabilityReport",
    "DomainError",
    "FactorPair",
    "FeatureNotFoundError",
    "FrontTarget",
    "FrontTrace",
    "GridDimensionError",
    "NoSolutionError",
    "OpenPathError",
    "Provenance",
    "QuantizationResult",
    "RayPair",
    "RaySpeedConfig",
    "RetardationTimes",
    "SingularityError",
    "TooFewSamplesError",
    "WaveField",
    "WavekinError",
    "bohr_path_integral",
    "bohr_residual",
    "boosted_closed_form",
    "compose_velocities",
    "de_broglie",
    "decompose_loop_phase",
    "dephasing",
    "detectability_report",
    "doppler_pair",
    "envelope_scales",
    "factorize",
    "find_sign_changes",
    "generalized_closed_form",
    "group_closure_defect",
    "interfere",
    "isotropy_search",
    "lorentz_factor",
    "measured_envelope_spacing",
    "measured_modulation_frequency",
    "measured_modulation_wavenumber",
    "one_d_travelling",
    "phase_rate",
    "ray_field",
    "ray_phase_at_absorption",
    "ray_phase_at_emission",
    "ray_speed_config",
    "reexpress_pair",
    "rest_amplitude",
    "retardation_residuals",
    "retardation_times",
    "scale_factor",
    "track_front",
]
