"""The source at rest: a spherical standing wave.

Renders the equatorial slice of the rest-frame field and a radial profile
in both amplitude modes. The unit-amplitude mode is what every other demo
builds on; the inverse-r mode shows the physical falloff and why the origin
is excluded there.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from wavekin import AmplitudeMode, BoostParams, Provenance, WaveField, rest_amplitude
from wavekin.harness import render, sample

OUT = Path(__file__).resolve().parent.parent / "build" / "demos"
OUT.mkdir(parents=True, exist_ok=True)

params = BoostParams(beta=0.0)
field = WaveField(params=params, provenance=Provenance.REST)

grid = sample(field, {"x": (-12.0, 12.0, 385), "y": (-12.0, 12.0, 385), "t": 0.0})
render(grid, "heatmap", OUT / "standing_wave_map.png")

# radial profiles; the inverse-r curve starts just off the singular origin
r = np.linspace(0.05, 12.0, 600)
unit = rest_amplitude(params, r, 0.0, 0.0, 0.0)
falloff = rest_amplitude(params, r, 0.0, 0.0, 0.0, amplitude_mode=AmplitudeMode.INVERSE_R)

fig, ax = plt.subplots(figsize=(8, 4.5))
ax.plot(r, unit, label="unit amplitude", lw=1.2)
ax.plot(r, falloff, label="1/r amplitude", lw=1.2)
ax.axhline(0.0, color="k", lw=0.5)
ax.set_xlabel("r")
ax.set_ylabel("field")
ax.set_title("standing wave radial profile, t = 0")
ax.legend()
fig.tight_layout()
fig.savefig(OUT / "standing_wave_profiles.png", dpi=120)
plt.close(fig)

print(f"wrote {OUT / 'standing_wave_map.png'}")
print(f"wrote {OUT / 'standing_wave_profiles.png'}")
print(f"node spacing along any ray: {np.pi / params.kappa0:.6f} (pi/kappa0)")
