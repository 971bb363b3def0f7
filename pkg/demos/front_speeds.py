"""Measuring the two propagation speeds instead of asserting them.

A family of field snapshots is rendered with tracked markers: carrier nodes
crawl at v while modulation crests sprint ahead at c^2/v. The tracker finds
each feature by root bisection at every sample time and fits a line, so the
speeds below are measurements of the field, not evaluations of a formula.
"""

import json
import math
from pathlib import Path

from wavekin import BoostParams, FrontTarget, Provenance, WaveField, track_front
from wavekin.wavemodel import factorize
from wavekin.harness import render, sample

OUT = Path(__file__).resolve().parent.parent / "build" / "demos"
OUT.mkdir(parents=True, exist_ok=True)

params = BoostParams(beta=0.6)
pair = factorize(params)

field = WaveField(params=params, provenance=Provenance.BOOSTED_CLOSED_FORM)
grid = sample(field, {"x": (0.0, 40.0, 801), "t": (0.0, 1.0, 3)})
render(grid, "line-snapshots", OUT / "front_speeds.png")
print(f"wrote {OUT / 'front_speeds.png'}")

results = {}
for target in (FrontTarget.CARRIER_NODE, FrontTarget.MODULATION_CREST):
    trace = track_front(pair, (0.0, 40.0), (0.0, 1.0), target, num_times=65)
    results[target.value] = {
        "fitted_speed": trace.fitted_speed,
        "fit_residual": trace.fit_residual,
    }
    print(f"{target.value:>18}: speed {trace.fitted_speed:.9f}, rms residual {trace.fit_residual:.2e}")

v = results["carrier-node"]["fitted_speed"]
w = results["modulation-crest"]["fitted_speed"]
print(f"product of speeds: {v * w:.9f} (c^2 = {params.c ** 2})")
print(f"dispersion check:  c/beta = {params.c / params.beta:.9f}")

(OUT / "front_speeds.json").write_text(json.dumps(results, indent=1) + "\n")
print(f"wrote {OUT / 'front_speeds.json'}")
