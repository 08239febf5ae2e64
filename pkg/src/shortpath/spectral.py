"""
Eigensolves and the observables derived from them: ground energy, gap, and
the ground-state overlap with the uniform superposition.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg as la

from ._parallel import ordered_map
from .errors import DomainError, NumericalError
from .model import ModelParams
from .operators import DriverSpec, hamiltonian, psi_plus

__all__ = [
    "RESOLUTION_FACTOR",
    "SpectralResult",
    "PathProfile",
    "eigensolve",
    "eigensolve_mp",
    "resolution_floor",
    "lowest_pair",
    "analyze",
    "path_gap_profile",
]

# Gaps smaller than this times ||H|| are reported but flagged.
RESOLUTION_FACTOR = 1e-12
RESIDUAL_TOL = 1e-10


def _is_tridiagonal(m: np.ndarray) -> bool:
    return m.shape[0] > 2 and not np.any(np.triu(m, 2))


def _describe(m: np.ndarray) -> str:
    return f"{m.shape[0]}x{m.shape[1]} matrix, max|entry|={np.max(np.abs(m)):.3g}"


def eigensolve(m: np.ndarray, count: int | None = None):
    """Ascending eigenvalues and orthonormal eigenvectors of a real symmetric matrix.

    Parameters
    ----------
    m : ndarray
        Real symmetric matrix. Tridiagonal input is detected and routed to
        the tridiagonal LAPACK driver.
    count : int, optional
        Only compute the ``count`` lowest eigenpairs.

    Returns
    -------
    values : ndarray
    vectors : ndarray
        Columns are eigenvectors.

    Raises
    ------
    NumericalError
        If LAPACK fails or the residual of the two lowest pairs exceeds
        ``1e-10 * ||m||``.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"square matrix required, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NumericalError(f"non-finite entries in {_describe(m)}")
    dim = m.shape[0]
    subset = None
    if count is not None and count < dim:
        subset = (0, count - 1)
    try:
        if _is_tridiagonal(m):
            kw = {} if subset is None else {"select": "i", "select_range": subset}
            values, vectors = la.eigh_tridiagonal(np.diag(m).copy(), np.diag(m, 1).copy(), **kw)
        else:
            values, vectors = la.eigh(m, subset_by_index=subset)
    except (la.LinAlgError, ValueError) as exc:
        raise NumericalError(f"eigensolve failed for {_describe(m)}: {exc}") from exc

    norm = max(float(np.linalg.norm(m)), 1.0)
    k = min(2, len(values))
    resid = np.linalg.norm(m @ vectors[:, :k] - vectors[:, :k] * values[:k], axis=0)
    if np.any(resid > RESIDUAL_TOL * norm):
        raise NumericalError(
            f"eigensolve residual {resid.max():.3g} too large for {_describe(m)}"
        )
    return values, vectors


def eigensolve_mp(m: np.ndarray, dps: int = 50):
    """Eigenvalues of ``m`` in extended precision (requires :mod:`mpmath`).

    Returns the ascending eigenvalues as a list of ``mpmath.mpf``. The
    input entries are taken as exact binary doubles.
    """
    import mpmath

    with mpmath.workdps(dps):
        a = mpmath.matrix(m.tolist())
        values = mpmath.eigsy(a, eigvals_only=True)
        return sorted(values[i] for i in range(len(values)))


def resolution_floor(m: np.ndarray) -> float:
    """Smallest gap considered resolved for matrix ``m`` (uses the infinity norm)."""
    return RESOLUTION_FACTOR * float(np.max(np.sum(np.abs(m), axis=1)))


@dataclass(frozen=True)
class SpectralResult:
    """Two lowest levels of a Hamiltonian and the ground-state overlap with psi_plus."""

    e0: float
    e1: float
    gap: float
    ground: np.ndarray
    overlap: float
    below_resolution: bool = False


def lowest_pair(m: np.ndarray, reference: np.ndarray | None = None) -> SpectralResult:
    """Lowest two eigenpairs of ``m``; the overlap is taken against ``reference``.

    The ground vector's sign is fixed so that its overlap with ``reference``
    is non-negative.
    """
    values, vectors = eigensolve(m, count=2)
    ground = vectors[:, 0]
    if reference is None:
        overlap = float("nan")
    else:
        dot = float(ground @ reference)
        if dot < 0:
            ground = -ground
        overlap = abs(dot)
    # a one-state space has no excited level
    e1 = float(values[1]) if len(values) > 1 else float("inf")
    gap = e1 - float(values[0])
    return SpectralResult(
        e0=float(values[0]),
        e1=e1,
        gap=gap,
        ground=ground,
        overlap=overlap,
        below_resolution=gap < resolution_floor(m),
    )


def analyze(params: ModelParams, spec: DriverSpec, precision: str = "double", dps: int = 50) -> SpectralResult:
    """Spectral data of ``H_Z - s b n (X/n)**k``.

    With ``precision="mp"`` the two lowest energies (and hence the gap) are
    recomputed with :mod:`mpmath` at ``dps`` digits; the ground vector and
    overlap still come from the double-precision solve.
    """
    h = hamiltonian(params, spec)
    res = lowest_pair(h, psi_plus(params.n))
    if precision == "double":
        return res
    if precision != "mp":
        raise DomainError(f"precision must be 'double' or 'mp', got {precision!r}")
    values = eigensolve_mp(h, dps=dps)
    gap = float(values[1] - values[0])
    return SpectralResult(
        e0=float(values[0]),
        e1=float(values[1]),
        gap=gap,
        ground=res.ground,
        overlap=res.overlap,
        below_resolution=False,
    )


@dataclass(frozen=True)
class PathProfile:
    """Gap of H_s along a grid of path parameters s."""

    s: np.ndarray
    gap: np.ndarray

    def __iter__(self):
        return iter(zip(self.s.tolist(), self.gap.tolist()))

    def __len__(self):
        return len(self.s)

    @property
    def min_gap(self) -> float:
        return float(np.min(self.gap))

    @property
    def argmin_s(self) -> float:
        return float(self.s[int(np.argmin(self.gap))])


def path_gap_profile(
    params: ModelParams,
    k: float,
    b: float,
    s_grid: Sequence[float],
    threads: int = 1,
) -> PathProfile:
    """Gap of ``H_Z - s b n (X/n)**k`` at every ``s`` in ``s_grid``."""
    s_grid = np.asarray(s_grid, dtype=float)
    if s_grid.size == 0:
        raise DomainError("s_grid must be non-empty")
    if np.any((s_grid < 0) | (s_grid > 1)):
        raise DomainError("every s must lie in [0, 1]")

    def gap_at(s):
        return analyze(params, DriverSpec(k=k, b=b, s=float(s))).gap

    gaps = ordered_map(gap_at, s_grid, threads)
    return PathProfile(s=s_grid, gap=np.asarray(gaps, dtype=float))
