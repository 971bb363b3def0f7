"""Which circular orbits close in phase?

The modulation of a moving source has wavenumber gamma kappa0 beta along the
motion. Carried around a closed loop, the accumulated phase must come back
to a multiple of 2 pi for the wave to be single valued - the loop integral
quantization rule. This demo sweeps circle radii at fixed speed, decomposes
each loop phase into (n, residual), and lists the radii that quantize.
"""

import math
from pathlib import Path

import numpy as np

from wavekin import BoostParams, bohr_path_integral, bohr_residual, de_broglie

OUT = Path(__file__).resolve().parent.parent / "build" / "demos"
OUT.mkdir(parents=True, exist_ok=True)

params = BoostParams(beta=0.6)
q = de_broglie(params)
print(f"matter wavenumber at beta = {params.beta}: kappa = {q.kappa_db}")
print(f"quantized radii are R_n = n / kappa = {1.0 / q.kappa_db:.6f} * n")
print()

TWO_PI = 2.0 * math.pi
rows = ["radius,loop_phase,nearest_n,residual"]
print(f"{'radius':>8}  {'loop phase':>11}  {'n':>3}  {'residual':>10}")
for radius in np.linspace(0.5, 6.0, 12):
    theta = np.linspace(0.0, TWO_PI, 20_001)
    path = np.column_stack([radius * np.cos(theta), radius * np.sin(theta)])
    result = bohr_path_integral(path, q.kappa_db)
    marker = "  <- closes" if abs(result.residual) < 0.15 else ""
    print(
        f"{radius:>8.3f}  {result.loop_phase:>11.5f}  {result.nearest_n:>3}  "
        f"{result.residual:>10.5f}{marker}"
    )
    rows.append(f"{radius:.17g},{result.loop_phase:.17g},{result.nearest_n},{result.residual:.17g}")
(OUT / "loop_quantization.csv").write_text("\n".join(rows) + "\n")
print(f"wrote {OUT / 'loop_quantization.csv'}")

print()
print("exact closures, analytic path length:")
for n in (1, 2, 3):
    path_length = TWO_PI * n / q.kappa_db
    result = bohr_residual(q.kappa_db, path_length)
    print(f"  L = {path_length:.6f}: n = {result.nearest_n}, residual = {result.residual}")
