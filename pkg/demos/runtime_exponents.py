# coding: utf-8
# # Runtime exponents side by side
#
# Every algorithm is summarized by C in a runtime of 2^(C n). Brute force is
# C = 1 and Grover search is C = 1/2.

# %%
import warnings

from shortpath import EXTENSIVE, NARROW_BASIN, bcr_estimate, comparison_report

sizes = range(30, 51, 2)

# %% [markdown]
# Extensive landscape at b = 0.7, a little below the gap minimum.

# %%
rep = comparison_report(EXTENSIVE, 1, 0.7, sizes)
for name, headline, fitted, note in rep.table():
    print(f"{name:24s} {headline!s:>22}  {fitted!s:>22}")

# %% [markdown]
# The per-size short path exponents drift slowly upward.

# %%
print([round(c, 4) for _, c in rep.shortpath.per_n])

# %% [markdown]
# Narrower true basin. The working field comes from the gap minima at sizes
# where the gap is still resolvable in double precision.

# %%
est = bcr_estimate(NARROW_BASIN, 1, [30, 34, 38])
print("b_min per size:", est.b_min, "working field:", est.b_work)

with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    rep = comparison_report(NARROW_BASIN, 1, est.b_work, sizes)
for w in caught:
    print("warning:", w.message)
for name, headline, fitted, note in rep.table():
    print(f"{name:24s} {headline!s:>22}")

# %% [markdown]
# Gaps for n >= 40 fall below the eigensolver resolution and are dropped, so
# the adiabatic exponent here rests on n <= 38 and comes out near 1.72.
