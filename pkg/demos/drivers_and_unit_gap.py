# coding: utf-8
# # Unit offset between the minima, and higher driver powers
#
# With the two minima separated by a constant 1, the linear driver's gap
# minimum drifts to zero field like 1/sqrt(n). Powers of the driver move it
# back to a finite field.

# %%
import math

import numpy as np

from shortpath import UNIT_GAP, DriverSpec, analyze, jump_min_gap, k2_transitions, min_gap, small_field_crossing

for n in (20, 30, 40, 50, 60):
    res = min_gap(UNIT_GAP.at(n), 1, b_range=(0, 1))
    sf = small_field_crossing(UNIT_GAP.at(n)).b_cross
    print(f"n={n}  b_min*sqrt(n)={res.b_min * math.sqrt(n):.4f}  small-field={sf * math.sqrt(n):.4f}  flagged={res.below_resolution}")

# %% [markdown]
# Extended precision confirms gaps that double precision can only flag.

# %%
p = UNIT_GAP.at(60)
b = min_gap(p, 1, b_range=(0, 1)).b_min
print("double:", analyze(p, DriverSpec(1, b)).gap)
print("mpmath:", analyze(p, DriverSpec(1, b), precision="mp", dps=60).gap)

# %% [markdown]
# Cubic driver: the narrow dip where the overlap jumps.

# %%
for n in (20, 40, 80):
    res = jump_min_gap(UNIT_GAP.at(n), 3, b_range=(0, 1.5))
    print(f"n={n}  b={res.b_min:.6f}  gap={res.gap_min:.3e}")

# %% [markdown]
# Quadratic driver. The first-order transition of the wide basin is at
# b = 1; the narrow basin's formula value tends to 1/3. The dip where the
# overlap jumps drifts left with n and stays between the two.

# %%
for n in (20, 40, 80, 160, 320):
    wide, narrow = k2_transitions(UNIT_GAP.at(n))
    res = jump_min_gap(UNIT_GAP.at(n), 2, b_range=(0.3, 1.2), points=451)
    print(f"n={n:3d}  narrow={narrow:.4f}  jump={res.b_min:.4f}  wide={wide}")

# %%
grid = np.linspace(0.3, 1.2, 10)
print([f"{analyze(UNIT_GAP.at(40), DriverSpec(2, b)).overlap:.2e}" for b in grid])
