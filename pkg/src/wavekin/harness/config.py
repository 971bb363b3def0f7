"""Run configuration: defaults, flat key-value config files, CLI overrides.

Precedence is defaults < config file < command-line flags. The file format
is one `key = value` pair per line, '#' comments allowed; axis values are
either a single number (hold fixed) or lo:hi:count (sweep).
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from pathlib import Path

from ..errors import ConfigError, WavekinError
from ..kinematics import BoostParams
from ..rayconstruct import ray_field, ray_speed_config
from ..wavemodel import AmplitudeMode, Provenance, WaveField
from .verify import SUITE_NAMES

__all__ = ["RunConfig", "parse_config_file", "parse_axis", "parse_window", "build_run_config"]

SCENARIOS = ("rest", "boosted", "ray", "generalized")
FORMATS = ("csv", "json")
STYLES = ("heatmap", "line-snapshots")
TARGETS = ("carrier-node", "modulation-crest")

_SCENARIO_PROVENANCE = {
    "rest": Provenance.REST,
    "boosted": Provenance.BOOSTED_CLOSED_FORM,
    "generalized": Provenance.GENERALIZED_CLOSED_FORM,
}


def parse_axis(text: str):
    """Parse an axis argument: '0.5' fixes the coordinate, '-8:8:257' sweeps it."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(f"axis sweep must be lo:hi:count, got {text!r}")
        try:
            return (float(parts[0]), float(parts[1]), int(parts[2]))
        except ValueError as exc:
            raise ConfigError(f"bad axis sweep {text!r}: {exc}") from exc
    try:
        return float(text)
    except ValueError as exc:
        raise ConfigError(f"bad axis value {text!r}: {exc}") from exc


def parse_window(text: str) -> tuple[float, float]:
    """Parse 'lo:hi' into a float pair."""
    parts = text.strip().split(":")
    if len(parts) != 2:
        raise ConfigError(f"window must be lo:hi, got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise ConfigError(f"bad window {text!r}: {exc}") from exc
    if not lo < hi:
        raise ConfigError(f"window needs lo < hi, got {text!r}")
    return lo, hi


@dataclass
class RunConfig:
    """Everything a harness run needs, validated before any work starts."""

    scenario: str = "boosted"
    beta: float = 0.6
    c: float = 1.0
    omega0: float = 1.0
    exponent_a: float = 1.0
    hbar: float = 1.0
    ray_speed: float | None = None
    amplitude_mode: str = "unit"
    axes: dict = field(
        default_factory=lambda: {
            "x": (-8.0, 8.0, 257),
            "y": (-6.0, 6.0, 193),
            "z": 0.0,
            "t": 0.0,
        }
    )
    seed: int = 20260819
    workers: int = 1
    include_timestamp: bool = False
    out: str | None = None
    fmt: str = "csv"
    style: str = "heatmap"
    width: int = 1024
    height: int = 768
    suites: tuple = ("all",)
    target: str = "carrier-node"
    num_times: int = 33
    x_window: tuple = (0.0, 40.0)
    t_window: tuple = (0.0, 1.0)
    a_values: tuple = (0.0, 0.5, 1.0, 2.0)
    beta1: float = 0.5
    beta2: float = 0.5

    def validate(self) -> "RunConfig":
        if self.scenario not in SCENARIOS:
            raise ConfigError(f"scenario must be one of {SCENARIOS}, got {self.scenario!r}")
        if self.fmt not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if self.style not in STYLES:
            raise ConfigError(f"style must be one of {STYLES}, got {self.style!r}")
        if self.target not in TARGETS:
            raise ConfigError(f"target must be one of {TARGETS}, got {self.target!r}")
        if self.amplitude_mode not in ("unit", "inverse-r"):
            raise ConfigError(f"amplitude_mode must be unit or inverse-r, got {self.amplitude_mode!r}")
        if self.amplitude_mode == "inverse-r" and self.scenario != "rest":
            raise ConfigError("inverse-r amplitude only applies to the rest scenario")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if self.num_times < 3:
            raise ConfigError(f"num_times must be >= 3 to fit a speed, got {self.num_times}")
        if min(self.width, self.height) < 64:
            raise ConfigError("width and height must be at least 64 pixels")
        if self.scenario == "boosted" and self.exponent_a != 1.0:
            raise ConfigError(
                "the boosted scenario is the exponent a = 1 member; use scenario=generalized"
            )
        for name in self.suites:
            if name != "all" and name not in SUITE_NAMES:
                raise ConfigError(f"unknown suite {name!r}")
        try:
            params = self.params()
            if self.scenario == "ray":
                ray_speed_config(params, self.ray_speed)
        except WavekinError as exc:
            raise ConfigError(str(exc)) from exc
        if self.scenario in ("boosted", "ray", "generalized") and abs(self.beta) >= 1.0:
            raise ConfigError(f"|beta| must be < 1 for scenario {self.scenario!r}")
        return self

    def params(self) -> BoostParams:
        try:
            return BoostParams(
                beta=self.beta,
                c=self.c,
                omega0=self.omega0,
                exponent_a=self.exponent_a,
                hbar=self.hbar,
            )
        except WavekinError as exc:
            raise ConfigError(str(exc)) from exc

    def make_field(self) -> WaveField:
        params = self.params()
        if self.scenario == "ray":
            return ray_field(params, self.ray_speed)
        mode = AmplitudeMode(self.amplitude_mode) if self.scenario == "rest" else AmplitudeMode.UNIT
        return WaveField(
            params=params, provenance=_SCENARIO_PROVENANCE[self.scenario], amplitude_mode=mode
        )


def parse_config_file(path: str | Path) -> dict[str, str]:
    """Read a flat key = value config file into a string map."""
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file {path} does not exist")
    values: dict[str, str] = {}
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value, got {raw!r}")
        key, _, val = line.partition("=")
        key = key.strip().lower().replace("-", "_")
        val = val.strip().strip("\"'")
        if not key or not val:
            raise ConfigError(f"{path}:{lineno}: empty key or value in {raw!r}")
        values[key] = val
    return values


_FLOAT_KEYS = {"beta", "c", "omega0", "hbar", "ray_speed", "beta1", "beta2"}
_INT_KEYS = {"seed", "workers", "width", "height", "num_times"}
_STR_KEYS = {"scenario", "amplitude_mode", "out", "fmt", "style", "target"}
_AXIS_KEYS = {"x", "y", "z", "t"}
_ALIASES = {"a": "exponent_a", "format": "fmt", "timestamp": "include_timestamp"}


def _coerce(key: str, value):
    if key == "exponent_a":
        return float(value)
    if key in _FLOAT_KEYS:
        return float(value)
    if key in _INT_KEYS:
        return int(value)
    if key in _STR_KEYS:
        return str(value)
    if key == "include_timestamp":
        if isinstance(value, bool):
            return value
        low = str(value).lower()
        if low in ("true", "yes", "1", "on"):
            return True
        if low in ("false", "no", "0", "off"):
            return False
        raise ConfigError(f"timestamp must be boolean, got {value!r}")
    if key == "suites":
        if isinstance(value, (tuple, list)):
            return tuple(value)
        return tuple(s.strip() for s in str(value).split(",") if s.strip())
    if key == "a_values":
        if isinstance(value, (tuple, list)):
            return tuple(float(v) for v in value)
        return tuple(float(s) for s in str(value).split(",") if s.strip())
    if key in ("x_window", "t_window"):
        if isinstance(value, tuple):
            return value
        return parse_window(str(value))
    raise ConfigError(f"unknown config key {key!r}")


def build_run_config(file_values: dict | None = None, cli_values: dict | None = None) -> RunConfig:
    """Merge defaults, config-file values, and CLI overrides into a RunConfig."""
    config = RunConfig()
    known = {f.name for f in fields(RunConfig)}
    for source in (file_values or {}, cli_values or {}):
        updates = {}
        axes = dict(config.axes)
        axes_touched = False
        for key, value in source.items():
            if value is None:
                continue
            key = _ALIASES.get(key, key)
            if key in _AXIS_KEYS:
                axes[key] = parse_axis(str(value)) if isinstance(value, str) else value
                axes_touched = True
                continue
            if key not in known:
                raise ConfigError(f"unknown config key {key!r}")
            try:
                updates[key] = _coerce(key, value)
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"bad value for {key!r}: {value!r} ({exc})") from exc
        if axes_touched:
            updates["axes"] = axes
        config = replace(config, **updates)
    return config.validate()
