"""Grid export and re-import.

CSV carries metadata in '#' comment lines, then a header row, then one row
per grid point (coordinates in storage order, value last). Every float is
written with 17 significant digits so re-importing reproduces bit-identical
doubles; JSON relies on repr round-tripping for the same guarantee.
"""

from __future__ import annotations

import io as _io
import json
from pathlib import Path

import numpy as np

from ..errors import ConfigError
from ..kinematics import BoostParams
from .grid import AxisSpec, FieldGrid

__all__ = ["export", "export_text", "import_csv", "import_json"]

_FLOAT_KEYS = ("beta", "c", "omega0", "exponent_a", "hbar", "ray_speed")


def _fmt(v: float) -> str:
    return format(float(v), ".16e")


def export_text(grid: FieldGrid, fmt: str) -> str:
    """Serialize a grid to CSV or JSON text."""
    if fmt == "csv":
        return _csv_text(grid)
    if fmt == "json":
        return _json_text(grid)
    raise ConfigError(f"format must be 'csv' or 'json', got {fmt!r}")


def export(grid: FieldGrid, fmt: str, path: str | Path) -> Path:
    """Write a grid to disk; returns the path written."""
    text = export_text(grid, fmt)
    path = Path(path)
    path.write_text(text)
    return path


def _csv_text(grid: FieldGrid) -> str:
    buf = _io.StringIO()
    buf.write("# wavekin field grid\n")
    for key, val in grid.metadata().items():
        if isinstance(val, float):
            buf.write(f"# {key} = {_fmt(val)}\n")
        else:
            buf.write(f"# {key} = {val}\n")
    for ax in grid.axes:
        buf.write(f"# axis: {ax.name} lo={_fmt(ax.lo)} hi={_fmt(ax.hi)} count={ax.count}\n")
    for name in sorted(grid.fixed):
        buf.write(f"# fixed: {name} = {_fmt(grid.fixed[name])}\n")
    names, coords = grid.coordinate_columns()
    buf.write(",".join(names + ["value"]) + "\n")
    flat = grid.values.ravel()
    for i in range(flat.size):
        row = [_fmt(c) for c in coords[i]] if names else []
        row.append(_fmt(flat[i]))
        buf.write(",".join(row) + "\n")
    return buf.getvalue()


def _json_text(grid: FieldGrid) -> str:
    doc = {
        "kind": "wavekin-field-grid",
        "metadata": grid.metadata(),
        "axes": [
            {"name": a.name, "lo": a.lo, "hi": a.hi, "count": a.count} for a in grid.axes
        ],
        "fixed": {k: grid.fixed[k] for k in sorted(grid.fixed)},
        "values": grid.values.ravel().tolist(),
    }
    return json.dumps(doc, indent=1) + "\n"


def _grid_from_parts(
    metadata: dict, axes: list[AxisSpec], fixed: dict[str, float], flat: np.ndarray
) -> FieldGrid:
    params = BoostParams(
        beta=metadata["beta"],
        c=metadata["c"],
        omega0=metadata["omega0"],
        exponent_a=metadata["exponent_a"],
        hbar=metadata["hbar"],
    )
    shape = tuple(a.count for a in axes)
    return FieldGrid(
        axes=tuple(axes),
        fixed=fixed,
        values=flat.reshape(shape),
        params=params,
        provenance=metadata["provenance"],
        amplitude_mode=metadata["amplitude_mode"],
        ray_speed=metadata.get("ray_speed"),
        created_at=metadata.get("created_at"),
    )


def import_csv(path: str | Path) -> FieldGrid:
    """Rebuild a FieldGrid from a CSV export, bit-identically."""
    metadata: dict = {}
    axes: list[AxisSpec] = []
    fixed: dict[str, float] = {}
    values: list[float] = []
    header_seen = False
    for line in Path(path).read_text().splitlines():
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("axis:"):
                fieldspec = body[len("axis:"):].split()
                name = fieldspec[0]
                kv = dict(part.split("=", 1) for part in fieldspec[1:])
                axes.append(AxisSpec(name, float(kv["lo"]), float(kv["hi"]), int(kv["count"])))
            elif body.startswith("fixed:"):
                name, _, val = body[len("fixed:"):].partition("=")
                fixed[name.strip()] = float(val)
            elif "=" in body:
                key, _, val = body.partition("=")
                key = key.strip()
                val = val.strip()
                metadata[key] = float(val) if key in _FLOAT_KEYS else val
            continue
        if not header_seen:
            header_seen = True  # column names are implied by the axis lines
            continue
        values.append(float(line.rsplit(",", 1)[1] if "," in line else line))
    return _grid_from_parts(metadata, axes, fixed, np.array(values, dtype=float))


def import_json(path: str | Path) -> FieldGrid:
    """Rebuild a FieldGrid from a JSON export, bit-identically."""
    doc = json.loads(Path(path).read_text())
    if doc.get("kind") != "wavekin-field-grid":
        raise ConfigError(f"{path} is not a wavekin field grid export")
    axes = [AxisSpec(a["name"], a["lo"], a["hi"], a["count"]) for a in doc["axes"]]
    fixed = {k: float(v) for k, v in doc["fixed"].items()}
    return _grid_from_parts(
        doc["metadata"], axes, fixed, np.array(doc["values"], dtype=float)
    )
