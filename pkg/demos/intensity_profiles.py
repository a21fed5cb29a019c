"""Simulate the screen intensity for all three qubit behaviors.

With the qubit inactive ("none") the two slits' amplitudes add coherently
and the screen shows interference fringes.  When the qubit records and
keeps which-path information ("remembers"), each slit feeds a different
composite state, the cross term vanishes, and only the smooth diffraction
envelope survives.  When the record is erased before detection
("forgets"), the fringes return, bit for bit identical to the inactive
case.

Writes CSV profiles and SVG plots into demos/output/.
"""

from pathlib import Path

import doubleslit as ds

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

config = ds.ExperimentConfig()   # reference constants, N = 2000
print(f"N = {config.n_positions}, geometry = {config.geometry_mode.value}")
print(f"velocity = {ds.derive(config).velocity:.4e} m/s\n")

profiles = ds.simulate_all(config)

for behavior, profile in profiles.items():
    total = ds.total_probability(profile)
    peak = profile.density.max()
    ds.write_profile_csv(profile, OUT / f"profile_{behavior.value}.csv")
    ds.write_profile_svg(profile, OUT / f"profile_{behavior.value}.svg")
    print(f"qubit = {behavior.value:9s}  in-range probability = {total:.4f}  "
          f"peak density = {peak:7.2f} 1/m")

none_density = profiles[ds.QubitBehavior.NONE].density
forgets_density = profiles[ds.QubitBehavior.FORGETS].density
print(f"\nnone == forgets bitwise: {none_density.tobytes() == forgets_density.tobytes()}")
print(f"profiles and plots written to {OUT}/")
