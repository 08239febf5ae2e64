"""
Operators in the permutation-symmetric (Dicke) subspace.

States of total spin n/2 are labelled by Hamming weight w = 0..n, so every
operator here is a dense real symmetric ``(n+1, n+1)`` array. ``X`` is the
total transverse-field operator ``sum_i X_i``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln

from .errors import DomainError, ParameterError
from .model import ModelParams, potential_vector

__all__ = [
    "DriverSpec",
    "x_offdiagonal",
    "x_matrix",
    "psi_plus",
    "is_integer_power",
    "spectral_power",
    "driver_matrix",
    "hamiltonian",
    "interpolated_hamiltonian",
]

INTEGER_TOL = 1e-9


@dataclass(frozen=True)
class DriverSpec:
    """Driver term ``s * b * n * (X/n)**k``.

    ``b`` is the field per spin (B = b n) and ``s`` the path parameter.
    """

    k: float
    b: float
    s: float = 1.0

    def __post_init__(self):
        if not self.k > 0:
            raise ParameterError(f"k > 0 violated: k={self.k}")
        if not self.b >= 0:
            raise ParameterError(f"b >= 0 violated: b={self.b}")
        if not 0.0 <= self.s <= 1.0:
            raise ParameterError(f"0 <= s <= 1 violated: s={self.s}")

    @property
    def strength(self) -> float:
        return self.s * self.b

    def describe(self) -> str:
        return f"k={self.k!r} b={self.b!r} s={self.s!r}"


def x_offdiagonal(n: int) -> np.ndarray:
    """Ladder coefficients ``<w+1|X|w> = sqrt((w+1)(n-w))`` for w = 0..n-1."""
    if n < 1:
        raise DomainError(f"n >= 1 required, got {n}")
    w = np.arange(n, dtype=float)
    return np.sqrt((w + 1.0) * (n - w))


def x_matrix(n: int) -> np.ndarray:
    """Total ``X`` on the n+1 Dicke states (tridiagonal, zero diagonal)."""
    off = x_offdiagonal(n)
    return np.diag(off, 1) + np.diag(off, -1)


def psi_plus(n: int) -> np.ndarray:
    """The uniform superposition in the Dicke basis.

    Amplitudes are ``sqrt(binom(n, w)) / 2**(n/2)``, computed in log space
    so that large ``n`` does not overflow.
    """
    if n < 1:
        raise DomainError(f"n >= 1 required, got {n}")
    w = np.arange(n + 1)
    log_amp = 0.5 * (gammaln(n + 1) - gammaln(w + 1) - gammaln(n - w + 1) - n * np.log(2.0))
    amp = np.exp(log_amp)
    return amp / np.linalg.norm(amp)


def is_integer_power(k: float) -> bool:
    return abs(k - round(k)) < INTEGER_TOL


def _x_eigensystem(n: int):
    # X has the exact spectrum n, n-2, ..., -n; reuse it instead of the
    # numerically computed eigenvalues.
    _, vecs = eigh_tridiagonal(np.zeros(n + 1), x_offdiagonal(n))
    lam = np.arange(-n, n + 1, 2, dtype=float)
    return lam, vecs


def spectral_power(n: int, k: float) -> np.ndarray:
    """``X**k`` for integer k, otherwise ``|X|**k``, via the eigendecomposition of X."""
    lam, vecs = _x_eigensystem(n)
    if is_integer_power(k):
        mapped = lam ** int(round(k))
    else:
        mapped = np.abs(lam) ** k
    out = (vecs * mapped) @ vecs.T
    return 0.5 * (out + out.T)


def _integer_power(n: int, k: int) -> np.ndarray:
    x = x_matrix(n)
    out = np.eye(n + 1)
    for _ in range(k):
        out = out @ x
    return 0.5 * (out + out.T)


def driver_matrix(n: int, spec: DriverSpec) -> np.ndarray:
    """``s b n (X/n)**k`` as a dense matrix.

    Integer ``k`` uses the exact banded matrix power of ``X``; any other
    ``k`` uses ``|X|**k`` built from the eigendecomposition of ``X``.
    Keeping integer powers banded preserves structure the eigensolver
    exploits, which matters for gaps near 1e-14.
    """
    scale = spec.strength / float(n) ** (spec.k - 1.0)
    if is_integer_power(spec.k):
        power = _integer_power(n, int(round(spec.k)))
    else:
        power = spectral_power(n, spec.k)
    return scale * power


def hamiltonian(params: ModelParams, spec: DriverSpec) -> np.ndarray:
    """``H_Z - s b n (X/n)**k`` in the Dicke basis."""
    h = -driver_matrix(params.n, spec)
    h[np.diag_indices_from(h)] += potential_vector(params)
    return h


def interpolated_hamiltonian(params: ModelParams, s: float) -> np.ndarray:
    """Adiabatic interpolation ``s H_Z - (1 - s) X`` in the Dicke basis."""
    if not 0.0 <= s <= 1.0:
        raise DomainError(f"s must lie in [0, 1], got {s}")
    h = -(1.0 - s) * x_matrix(params.n)
    h[np.diag_indices_from(h)] += s * potential_vector(params)
    return h
