"""Raster rendering of sampled grids."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from ..analysis import FrontTarget, track_front
from ..errors import DegenerateFitError, FeatureNotFoundError, GridDimensionError
from ..wavemodel import factorize
from .grid import FieldGrid

__all__ = ["render"]

DEFAULT_WIDTH = 1024
DEFAULT_HEIGHT = 768


def render(
    grid: FieldGrid,
    style: str,
    path: str | Path,
    width: int = DEFAULT_WIDTH,
    height: int = DEFAULT_HEIGHT,
) -> Path:
    """Render a grid to a PNG.

    'heatmap' needs exactly two swept axes; 'line-snapshots' needs swept t
    and x (a family of x-profiles, one per time, with tracked carrier-node
    and modulation-crest markers where they exist). Dimensionality problems
    raise GridDimensionError before any file is written.
    """
    path = Path(path)
    if style == "heatmap":
        fig = _heatmap(grid, width, height)
    elif style == "line-snapshots":
        fig = _line_snapshots(grid, width, height)
    else:
        raise GridDimensionError(f"style must be 'heatmap' or 'line-snapshots', got {style!r}")
    fig.savefig(path)
    plt.close(fig)
    return path


def _figure(width: int, height: int):
    dpi = 100.0
    return plt.figure(figsize=(width / dpi, height / dpi), dpi=dpi)


def _title(grid: FieldGrid) -> str:
    p = grid.params
    bits = [grid.provenance, f"beta={p.beta:g}", f"omega0={p.omega0:g}"]
    if p.exponent_a != 1.0:
        bits.append(f"a={p.exponent_a:g}")
    if grid.ray_speed is not None:
        bits.append(f"C={grid.ray_speed:g}")
    return ", ".join(bits)


def _heatmap(grid: FieldGrid, width: int, height: int):
    if len(grid.axes) != 2:
        raise GridDimensionError(
            f"heatmap needs exactly 2 swept axes, got {len(grid.axes)}"
        )
    ax_h, ax_v = grid.axes
    fig = _figure(width, height)
    ax = fig.add_subplot(111)
    im = ax.imshow(
        grid.values.T,
        origin="lower",
        extent=(ax_h.lo, ax_h.hi, ax_v.lo, ax_v.hi),
        aspect="auto",
        cmap="RdBu_r",
    )
    fig.colorbar(im, ax=ax, label="amplitude")
    ax.set_xlabel(ax_h.name)
    ax.set_ylabel(ax_v.name)
    ax.set_title(_title(grid))
    return fig


def _line_snapshots(grid: FieldGrid, width: int, height: int):
    names = [a.name for a in grid.axes]
    if names != ["t", "x"]:
        raise GridDimensionError(
            f"line-snapshots needs swept t and x (others fixed), got {names or 'none'}"
        )
    t_ax, x_ax = grid.axes
    ts = t_ax.coords()
    xs = x_ax.coords()

    traces = {}
    if grid.params.beta != 0.0 and grid.provenance != "rest":
        pair = factorize(grid.params)
        for target in (FrontTarget.CARRIER_NODE, FrontTarget.MODULATION_CREST):
            try:
                traces[target] = track_front(
                    pair, (x_ax.lo, x_ax.hi), (t_ax.lo, t_ax.hi), target, num_times=len(ts)
                )
            except (FeatureNotFoundError, DegenerateFitError):
                pass  # window too tight for this feature; draw without markers

    fig = _figure(width, height)
    ax = fig.add_subplot(111)
    colors = plt.cm.viridis(np.linspace(0.0, 0.85, len(ts)))
    for i, t in enumerate(ts):
        ax.plot(xs, grid.values[i], color=colors[i], lw=1.2, label=f"t={t:g}")
    marker_style = {
        FrontTarget.CARRIER_NODE: dict(marker="o", color="crimson", label="carrier node"),
        FrontTarget.MODULATION_CREST: dict(marker="^", color="black", label="modulation crest"),
    }
    for target, trace in traces.items():
        yvals = [np.interp(pos, xs, grid.values[i]) for i, pos in enumerate(trace.positions)]
        style = marker_style[target]
        ax.scatter(trace.positions, yvals, s=48, zorder=5, **style)
    if len(ts) <= 8:
        ax.legend(loc="upper right", fontsize=8)
    ax.set_xlabel("x")
    ax.set_ylabel("amplitude")
    ax.set_title(_title(grid))
    return fig
