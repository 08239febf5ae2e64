"""
Algorithms restricted to a Hamming ball around a reference string.

Take the reference string to be 1 on its first ``w_b`` bits and 0 on the
rest. For a potential that depends only on total Hamming weight, the
projected Hamiltonian is symmetric under permutations inside each of the two
blocks, so it acts on states labelled by ``(w1, w2)``: the weights of the
first ``w_b`` bits and of the remaining ``n - w_b`` bits. Such a state lies
at distance ``(w_b - w1) + w2`` from the reference and has total weight
``w1 + w2``. Any reference string of the same weight gives the same spectrum.

Projection onto the ball of radius ``d`` is done by keeping only admissible
``(w1, w2)`` and dropping couplings that leave the ball, which is
``P H P`` restricted to the range of ``P``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._parallel import ordered_map
from .errors import DomainError
from .model import ModelParams, potential_vector
from .operators import DriverSpec, is_integer_power
from .spectral import eigensolve, lowest_pair

__all__ = [
    "TwoWeightBasis",
    "build_basis",
    "projected_x",
    "projected_hamiltonian",
    "projected_initial_state",
    "projected_driver",
    "projected_shortpath_hamiltonian",
    "ProjectedProfile",
    "projected_path_profile",
]


@dataclass(frozen=True)
class TwoWeightBasis:
    n: int
    w_b: int
    d: int
    states: tuple[tuple[int, int], ...]
    index: dict

    def __len__(self):
        return len(self.states)

    @property
    def weights(self) -> np.ndarray:
        """Total Hamming weight ``w1 + w2`` of every basis state."""
        return np.array([w1 + w2 for w1, w2 in self.states], dtype=int)

    @property
    def distances(self) -> np.ndarray:
        """Distance ``(w_b - w1) + w2`` of every basis state from the reference."""
        return np.array([self.w_b - w1 + w2 for w1, w2 in self.states], dtype=int)


def build_basis(n: int, w_b: int, d: int) -> TwoWeightBasis:
    """All ``(w1, w2)`` within distance ``d`` of a weight-``w_b`` reference, lexicographic."""
    if n < 1:
        raise DomainError(f"n >= 1 required, got {n}")
    if not 0 <= w_b <= n:
        raise DomainError(f"0 <= w_b <= n violated: w_b={w_b}, n={n}")
    if not 0 <= d <= n:
        raise DomainError(f"0 <= d <= n violated: d={d}, n={n}")
    states = tuple(
        (w1, w2)
        for w1 in range(w_b + 1)
        for w2 in range(n - w_b + 1)
        if (w_b - w1) + w2 <= d
    )
    return TwoWeightBasis(n, w_b, d, states, {st: i for i, st in enumerate(states)})


def projected_x(basis: TwoWeightBasis) -> np.ndarray:
    """``P X P`` on the ball, with X the total transverse field."""
    n, w_b = basis.n, basis.w_b
    dim = len(basis)
    x = np.zeros((dim, dim))
    for i, (w1, w2) in enumerate(basis.states):
        j = basis.index.get((w1 + 1, w2))
        if j is not None:
            x[i, j] = x[j, i] = np.sqrt((w1 + 1) * (w_b - w1))
        j = basis.index.get((w1, w2 + 1))
        if j is not None:
            x[i, j] = x[j, i] = np.sqrt((w2 + 1) * (n - w_b - w2))
    return x


def _check(params, basis):
    if params.n != basis.n:
        raise DomainError(f"basis is for n={basis.n}, params for n={params.n}")


def _diagonal(params, basis):
    return potential_vector(params)[basis.weights]


def projected_hamiltonian(params: ModelParams, basis: TwoWeightBasis, s: float) -> np.ndarray:
    """``P (s H_Z - (1 - s) X) P`` restricted to the ball."""
    _check(params, basis)
    if not 0.0 <= s <= 1.0:
        raise DomainError(f"s must lie in [0, 1], got {s}")
    h = -(1.0 - s) * projected_x(basis)
    h[np.diag_indices_from(h)] += s * _diagonal(params, basis)
    return h


def projected_initial_state(basis: TwoWeightBasis) -> np.ndarray:
    """Ground state of ``-P X P``, sign chosen non-negative."""
    _, vecs = eigensolve(-projected_x(basis), count=1)
    v = vecs[:, 0]
    return v if v.sum() >= 0 else -v


def projected_driver(basis: TwoWeightBasis, spec: DriverSpec) -> np.ndarray:
    """``s b n (P X P / n)**k``; non-integer k uses ``|P X P|**k``."""
    x = projected_x(basis)
    n = basis.n
    if is_integer_power(spec.k):
        power = np.linalg.matrix_power(x, int(round(spec.k)))
    else:
        lam, vecs = eigensolve(x)
        power = (vecs * np.abs(lam) ** spec.k) @ vecs.T
    power = 0.5 * (power + power.T)
    return spec.strength / float(n) ** (spec.k - 1.0) * power


def projected_shortpath_hamiltonian(
    params: ModelParams, basis: TwoWeightBasis, spec: DriverSpec
) -> np.ndarray:
    """Short-path family on the ball: ``H_Z - s b n (P X P / n)**k``."""
    _check(params, basis)
    h = -projected_driver(basis, spec)
    h[np.diag_indices_from(h)] += _diagonal(params, basis)
    return h


@dataclass(frozen=True)
class ProjectedProfile:
    s: np.ndarray
    gap: np.ndarray
    success: bool
    ground_weight: int
    ball_min_energy: float
    global_min_energy: float
    basis_size: int

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


def projected_path_profile(
    params: ModelParams,
    basis: TwoWeightBasis,
    s_grid: Sequence[float],
    threads: int = 1,
) -> ProjectedProfile:
    """Gap of the locally projected adiabatic path at each ``s``.

    ``success`` is true when the lowest potential value inside the ball
    equals the global minimum of the potential, i.e. when the projected
    search can find the optimum at all. ``ground_weight`` is the Hamming
    weight of the s = 1 ground state.
    """
    _check(params, basis)
    s_grid = np.asarray(s_grid, dtype=float)
    if s_grid.size == 0:
        raise DomainError("s_grid must be non-empty")
    if np.any((s_grid < 0) | (s_grid > 1)):
        raise DomainError("every s must lie in [0, 1]")

    def gap_at(s):
        return lowest_pair(projected_hamiltonian(params, basis, float(s))).gap

    gaps = np.asarray(ordered_map(gap_at, s_grid, threads), dtype=float)
    diag = _diagonal(params, basis)
    ball_min = float(diag.min())
    global_min = float(potential_vector(params).min())
    return ProjectedProfile(
        s=s_grid,
        gap=gaps,
        success=bool(np.isclose(ball_min, global_min, rtol=0.0, atol=1e-12)),
        ground_weight=int(basis.weights[int(np.argmin(diag))]),
        ball_min_energy=ball_min,
        global_min_energy=global_min,
        basis_size=len(basis),
    )
