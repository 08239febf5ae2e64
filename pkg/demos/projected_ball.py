# coding: utf-8
# # The locally projected short path
#
# Restricting the search to a Hamming ball of radius d around a reference
# string keeps the gap open when the ball contains a single basin. Whether
# it finds the optimum depends on where the ball sits.

# %%
import numpy as np

from shortpath import EXTENSIVE, build_basis, projected_path_profile

s_grid = np.linspace(0, 1, 101)

# %% [markdown]
# A ball around the all-zeros string that stops short of the barrier.

# %%
for n in (20, 40, 80, 160):
    prof = projected_path_profile(EXTENSIVE.at(n), build_basis(n, 0, n // 8), s_grid)
    print(f"n={n:3d}  basis={prof.basis_size:5d}  min gap={prof.min_gap:.3f}  success={prof.success}")

# %% [markdown]
# A ball far from the optimum finds only its own best point.

# %%
prof = projected_path_profile(EXTENSIVE.at(40), build_basis(40, 30, 5), s_grid)
print(prof.success, prof.ball_min_energy, prof.global_min_energy, prof.ground_weight)
