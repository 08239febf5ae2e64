"""
Spectral laboratory for the short-path optimization algorithm on potentials
that depend only on Hamming weight.

Everything is computed in the (n+1)-dimensional permutation-symmetric
subspace, or, for the locally projected variant, in the O(n^2) two-weight
basis around a reference string.
"""

__version__ = "0.1.0"

from .analytic import (
    CrossingEstimate,
    analytic_crossing,
    decoupled_e0_per_spin,
    decoupled_e1_per_spin,
    k2_transitions,
    small_field_crossing,
)
from .model import (
    EXTENSIVE,
    FLUCTUATING,
    NARROW_BASIN,
    UNIT_GAP,
    ModelParams,
    ParamSpec,
    PerN,
    greedy_grover_exponent,
    potential_at,
    potential_vector,
    resolve_params,
)
from .operators import DriverSpec, driver_matrix, hamiltonian, psi_plus, x_matrix
from .projected import (
    build_basis,
    projected_hamiltonian,
    projected_path_profile,
    projected_shortpath_hamiltonian,
)
from .scaling import (
    adiabatic_exponent,
    comparison_report,
    shortpath_exponent,
)
from .search import bcr_estimate, golden_section_min, jump_min_gap, min_gap, sweep_b
from .spectral import SpectralResult, analyze, eigensolve, path_gap_profile

__all__ = [
    "__version__",
    "CrossingEstimate",
    "analytic_crossing",
    "decoupled_e0_per_spin",
    "decoupled_e1_per_spin",
    "k2_transitions",
    "small_field_crossing",
    "EXTENSIVE",
    "FLUCTUATING",
    "NARROW_BASIN",
    "UNIT_GAP",
    "ModelParams",
    "ParamSpec",
    "PerN",
    "greedy_grover_exponent",
    "potential_at",
    "potential_vector",
    "resolve_params",
    "DriverSpec",
    "driver_matrix",
    "hamiltonian",
    "psi_plus",
    "x_matrix",
    "build_basis",
    "projected_hamiltonian",
    "projected_path_profile",
    "projected_shortpath_hamiltonian",
    "adiabatic_exponent",
    "comparison_report",
    "shortpath_exponent",
    "bcr_estimate",
    "golden_section_min",
    "min_gap",
    "jump_min_gap",
    "sweep_b",
    "SpectralResult",
    "analyze",
    "eigensolve",
    "path_gap_profile",
]
