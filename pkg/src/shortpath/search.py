"""
Sweeps over the transverse field b and location of gap minima.

The gap as a function of b is not unimodal in general (for k = 2 it stays
small over a whole range of b), so minima are bracketed on a coarse grid
first and every separated candidate is refined by golden-section search.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from ._parallel import ordered_map
from .errors import BracketError, DomainError
from .model import ModelParams, ParamSpec
from .operators import DriverSpec
from .spectral import analyze

__all__ = [
    "SweepRow",
    "GoldenResult",
    "MinGapResult",
    "BcrEstimate",
    "sweep_b",
    "golden_section_min",
    "min_gap",
    "jump_min_gap",
    "bcr_estimate",
    "DEFAULT_COARSE_POINTS",
    "DEFAULT_GAP_TOL",
    "DEFAULT_MARGIN_FRAC",
]

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
MAX_ITER = 200
DEFAULT_COARSE_POINTS = 64
# The minimum of an avoided crossing is only ~1e-10 wide at n = 50, so b
# must be located far more finely than the gap itself.
DEFAULT_GAP_TOL = 1e-14
DEFAULT_MARGIN_FRAC = 0.025
# Two coarse minima are separate only if the gap rises by more than this
# factor between them.
SEPARATION_FACTOR = 2.0


@dataclass(frozen=True)
class SweepRow:
    b: float
    e0: float
    e1: float
    gap: float
    overlap: float
    below_resolution: bool = False


def sweep_b(
    params: ModelParams,
    k: float,
    s: float,
    b_grid: Sequence[float],
    threads: int = 1,
) -> list[SweepRow]:
    """Spectral data of H_s at every field in an ascending ``b_grid``."""
    b_grid = [float(b) for b in b_grid]
    if not b_grid:
        raise DomainError("b_grid must be non-empty")
    if any(b < 0 for b in b_grid):
        raise DomainError("b must be non-negative")
    if any(b2 < b1 for b1, b2 in zip(b_grid, b_grid[1:])):
        raise DomainError("b_grid must be ascending")

    def row(b):
        r = analyze(params, DriverSpec(k=k, b=b, s=s))
        return SweepRow(b, r.e0, r.e1, r.gap, r.overlap, r.below_resolution)

    return ordered_map(row, b_grid, threads)


@dataclass(frozen=True)
class GoldenResult:
    x: float
    fun: float
    nit: int
    converged: bool
    bracket: tuple[float, float]

    def __iter__(self):
        # allows ``x, fx = golden_section_min(...)``
        return iter((self.x, self.fun))


def _golden(f, a, c, tol, maxiter=MAX_ITER, best=None):
    x1 = c - INV_PHI * (c - a)
    x2 = a + INV_PHI * (c - a)
    f1, f2 = f(x1), f(x2)
    nit = 0
    while c - a > tol and nit < maxiter:
        nit += 1
        if f1 < f2:
            c, x2, f2 = x2, x1, f1
            x1 = c - INV_PHI * (c - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (c - a)
            f2 = f(x2)
        if not a < x1 < x2 < c:
            # interval has collapsed to adjacent doubles
            break
    candidates = [(f1, x1), (f2, x2)]
    if best is not None:
        candidates.append((best[1], best[0]))
    fx, x = min(candidates)
    converged = c - a <= tol or not a < x1 < x2 < c
    return GoldenResult(x=x, fun=fx, nit=nit, converged=converged, bracket=(a, c))


def golden_section_min(
    f: Callable[[float], float],
    bracket: tuple[float, float, float],
    tol: float = 1e-10,
    maxiter: int = MAX_ITER,
) -> GoldenResult:
    """Minimize ``f`` inside a bracket ``(a, m, c)`` by golden-section search.

    The bracket must satisfy ``a < m < c`` with ``f(m)`` below both
    ``f(a)`` and ``f(c)``. Iteration stops once the interval is narrower
    than ``tol``. If ``maxiter`` is reached first the best point found is
    returned with ``converged=False`` and a :class:`RuntimeWarning`.
    """
    a, m, c = (float(v) for v in bracket)
    if not a < m < c:
        raise BracketError(f"bracket must satisfy a < m < c, got {bracket}")
    fa, fm, fc = f(a), f(m), f(c)
    if not (fm < fa and fm < fc):
        raise BracketError(
            f"f(m) must lie below both ends: f(a)={fa}, f(m)={fm}, f(c)={fc}"
        )
    if c - a <= tol:
        return GoldenResult(x=m, fun=fm, nit=0, converged=True, bracket=(a, c))
    res = _golden(f, a, c, tol, maxiter, best=(m, fm))
    if not res.converged:
        warnings.warn(
            f"golden-section search hit the {maxiter}-iteration cap "
            f"(interval width {res.bracket[1] - res.bracket[0]:.3g})",
            RuntimeWarning,
            stacklevel=2,
        )
    return res


@dataclass(frozen=True)
class MinGapResult:
    """A refined minimum of the gap over b.

    ``others`` holds further separated local minima (deepest first) when
    the gap landscape has more than one.
    """

    b_min: float
    gap_min: float
    bracket: tuple[float, float]
    below_resolution: bool
    no_bracket: bool = False
    converged: bool = True
    others: tuple["MinGapResult", ...] = field(default=())

    @property
    def minima(self) -> tuple["MinGapResult", ...]:
        return (self,) + self.others

    def as_dict(self) -> dict:
        return {
            "b_min": self.b_min,
            "gap_min": self.gap_min,
            "bracket": list(self.bracket),
            "below_resolution": self.below_resolution,
        }


def _candidates(gaps, below):
    """Indices of separated local minima of the clipped coarse gap curve."""
    g = np.where(below, 0.0, gaps)
    n = len(g)
    local = [i for i in range(1, n - 1) if g[i] <= g[i - 1] and g[i] <= g[i + 1]]
    if not local:
        return []
    groups = [[local[0]]]
    for j in local[1:]:
        i = groups[-1][-1]
        barrier = np.max(g[i : j + 1])
        if barrier <= SEPARATION_FACTOR * max(g[i], g[j]):
            groups[-1].append(j)
        else:
            groups.append([j])
    return [min(grp, key=lambda i: gaps[i]) for grp in groups]


def _refine_jump(params, k, s, grid, rows, tol):
    """Refine the gap inside the largest ``log(overlap)`` step of a sweep.

    Returns the refined minimum and whether it is a true dip, i.e. lower
    than the gap at both ends of the step.
    """
    with np.errstate(divide="ignore"):
        log_ov = np.log(np.array([r.overlap for r in rows]))
    steps = np.diff(log_ov)
    steps[~np.isfinite(steps)] = -np.inf
    i = int(np.argmax(steps))
    a, c = float(grid[i]), float(grid[i + 1])

    def spectral(b):
        return analyze(params, DriverSpec(k=k, b=b, s=s))

    # Bisect on the overlap switching from the left value to the right one.
    # Half way in amplitude is close to the centre of a two-level crossing.
    threshold = 0.5 * (rows[i].overlap + rows[i + 1].overlap)
    lo, hi = a, c
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if spectral(mid).overlap < threshold:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)

    def gap(b):
        return spectral(min(max(b, a), c)).gap

    # Widen a bracket around x until the V-shaped dip is enclosed, then refine.
    g_x = gap(x)
    width = max(tol, 4.0 * math.ulp(x))
    while width < c - a and not (gap(x - width) > g_x and gap(x + width) > g_x):
        width *= 2.0
    res = _golden(gap, max(x - width, a), min(x + width, c), tol, best=(x, g_x))
    r = spectral(res.x)
    found = MinGapResult(
        b_min=res.x,
        gap_min=r.gap,
        bracket=(a, c),
        below_resolution=r.below_resolution,
        converged=res.converged,
    )
    return found, r.gap < min(rows[i].gap, rows[i + 1].gap)


def min_gap(
    params: ModelParams,
    k: float,
    s: float = 1.0,
    b_range: tuple[float, float] = (0.0, 2.0),
    coarse_points: int = DEFAULT_COARSE_POINTS,
    tol: float = DEFAULT_GAP_TOL,
    threads: int = 1,
) -> MinGapResult:
    """Locate the minimum gap of H_s over the field range ``b_range``.

    The gap is sampled on ``coarse_points`` uniformly spaced fields. Each
    local minimum of the sampled curve is a candidate; neighbouring
    candidates are merged unless the gap between them rises above
    ``2x`` the larger of the two (gaps below the resolution floor count as
    equal). Every surviving candidate is refined by golden-section search
    to width ``tol``. The step where the ground-state overlap jumps is
    refined as well (see :func:`jump_min_gap`), since that avoided crossing
    can be narrower than the grid spacing. The deepest minimum is returned,
    the rest in ``others``.
    """
    lo, hi = (float(v) for v in b_range)
    if not lo < hi:
        raise DomainError(f"b_range must satisfy lo < hi, got {b_range}")
    if lo < 0:
        raise DomainError("b_range must be non-negative")
    if coarse_points < 8:
        raise DomainError(f"coarse_points >= 8 required, got {coarse_points}")

    grid = np.linspace(lo, hi, coarse_points)
    rows = sweep_b(params, k, s, grid, threads=threads)
    gaps = np.array([r.gap for r in rows])
    below = np.array([r.below_resolution for r in rows])

    def gap(b):
        return analyze(params, DriverSpec(k=k, b=min(max(b, 0.0), hi), s=s)).gap

    def refine(i):
        a, c = float(grid[i - 1]), float(grid[i + 1])
        res = _golden(gap, a, c, tol, best=(float(grid[i]), float(gaps[i])))
        r = analyze(params, DriverSpec(k=k, b=res.x, s=s))
        return MinGapResult(
            b_min=res.x,
            gap_min=r.gap,
            bracket=(a, c),
            below_resolution=r.below_resolution,
            converged=res.converged,
        )

    found = ordered_map(refine, _candidates(gaps, below), threads)
    # a narrow dip where the ground state switches basins can fall between
    # grid points; add it unless a coarse candidate already covers it
    jump, is_dip = _refine_jump(params, k, s, grid, rows, tol)
    spacing = float(grid[1] - grid[0])
    if is_dip and all(abs(jump.b_min - m.b_min) > spacing for m in found):
        found.append(jump)
    if not found:
        i = int(np.argmin(gaps))
        return MinGapResult(
            b_min=float(grid[i]),
            gap_min=float(gaps[i]),
            bracket=(float(grid[i]), float(grid[i])),
            below_resolution=bool(below[i]),
            no_bracket=True,
        )
    found.sort(key=lambda m: (m.gap_min, m.b_min))
    best = found[0]
    return MinGapResult(
        b_min=best.b_min,
        gap_min=best.gap_min,
        bracket=best.bracket,
        below_resolution=best.below_resolution,
        converged=best.converged,
        others=tuple(found[1:]),
    )


def jump_min_gap(
    params: ModelParams,
    k: float,
    s: float = 1.0,
    b_range: tuple[float, float] = (0.0, 2.0),
    points: int = 201,
    tol: float = DEFAULT_GAP_TOL,
    threads: int = 1,
) -> MinGapResult:
    """Gap minimum at the field where the ground-state overlap jumps.

    The ground state switching basins shows up as the largest step of
    ``log(overlap)`` between neighbouring points of a uniform sweep. The
    gap is minimized by golden section inside that step. Unlike
    :func:`min_gap` this finds the avoided crossing even when it is a
    narrow dip next to a region where the gap is smaller still, as for
    ``k = 2``.
    """
    lo, hi = (float(v) for v in b_range)
    if not 0 <= lo < hi:
        raise DomainError(f"b_range must satisfy 0 <= lo < hi, got {b_range}")
    if points < 3:
        raise DomainError(f"points >= 3 required, got {points}")
    grid = np.linspace(lo, hi, points)
    rows = sweep_b(params, k, s, grid, threads=threads)
    res, _ = _refine_jump(params, k, s, grid, rows, tol)
    return res


@dataclass(frozen=True)
class BcrEstimate:
    """Per-size gap-minimum locations and the recommended working field."""

    n: tuple[int, ...]
    b_min: tuple[float, ...]
    gap_min: tuple[float, ...]
    below_resolution: tuple[bool, ...]
    b_work: float
    margin: float
    size_exponent: float
    n_independent: bool
    note: str

    def rows(self):
        return list(zip(self.n, self.b_min, self.gap_min, self.below_resolution))


def bcr_estimate(
    spec: ParamSpec,
    k: float,
    n_list: Sequence[int],
    s: float = 1.0,
    b_range: tuple[float, float] = (0.0, 2.0),
    coarse_points: int = DEFAULT_COARSE_POINTS,
    tol: float = DEFAULT_GAP_TOL,
    margin: float | None = None,
    threads: int = 1,
) -> BcrEstimate:
    """Estimate the critical field from gap minima at several sizes.

    The working field is ``b_min(n_max) - margin`` with
    ``margin = 0.025 * b_min(n_max)`` unless given. The size dependence of
    ``b_min`` is summarized by the least-squares slope of
    ``log b_min`` against ``log n``; a slope below -1/4 means the minimum
    drifts to zero field and there is no size-independent critical field.
    """
    n_list = sorted(int(n) for n in n_list)
    if not n_list:
        raise DomainError("n_list must be non-empty")

    def one(n):
        return min_gap(spec.at(n), k, s, b_range, coarse_points, tol)

    results = ordered_map(one, n_list, threads)
    b_min = tuple(r.b_min for r in results)
    last = b_min[-1]
    if margin is None:
        margin = DEFAULT_MARGIN_FRAC * last
    if len(n_list) >= 2 and all(b > 0 for b in b_min):
        slope = float(np.polyfit(np.log(n_list), np.log(b_min), 1)[0])
    else:
        slope = 0.0
    independent = slope > -0.25
    if independent:
        note = f"b_min approaches a size-independent value (log-log slope {slope:.3f})"
    else:
        note = (
            f"no N-independent limit: b_min shrinks roughly as N^{slope:.2f}"
        )
    return BcrEstimate(
        n=tuple(n_list),
        b_min=b_min,
        gap_min=tuple(r.gap_min for r in results),
        below_resolution=tuple(r.below_resolution for r in results),
        b_work=last - margin,
        margin=margin,
        size_exponent=slope,
        n_independent=independent,
        note=note,
    )
