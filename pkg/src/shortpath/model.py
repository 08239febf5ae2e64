"""
Piecewise-linear Hamming-weight potentials.

The potential rises linearly from 0 at w = 0 to ``v_max`` at the kink
``w = n/2 + delta_w`` and falls linearly back to ``delta_v`` at ``w = n``.
An optional parity term adds ``fluct_f`` on every odd weight.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ParameterError

__all__ = [
    "ModelParams",
    "PerN",
    "ParamSpec",
    "resolve_params",
    "potential_at",
    "potential_vector",
    "binary_entropy",
    "greedy_exponent_from_fraction",
    "greedy_grover_exponent",
    "EXTENSIVE",
    "NARROW_BASIN",
    "UNIT_GAP",
    "FLUCTUATING",
]


@dataclass(frozen=True)
class ModelParams:
    """Resolved parameters of the toy potential at a fixed qubit count.

    Parameters
    ----------
    n : int
        Number of qubits.
    v_max : float
        Height of the barrier between the two basins.
    delta_v : float
        Energy of the false minimum at w = n.
    delta_w : float
        Offset of the barrier from n/2. Negative values narrow the basin
        around the global minimum at w = 0.
    fluct_f : float
        Extra energy added on odd Hamming weights.
    """

    n: int
    v_max: float
    delta_v: float
    delta_w: float
    fluct_f: float = 0.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ParameterError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        for name in ("v_max", "delta_v", "delta_w", "fluct_f"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ParameterError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if self.v_max <= 0:
            raise ParameterError(f"v_max > 0 violated: v_max={self.v_max}")
        if self.delta_v <= 0:
            raise ParameterError(f"delta_v > 0 violated: delta_v={self.delta_v}")
        if not self.delta_v < self.v_max:
            raise ParameterError(
                f"delta_v < v_max violated: delta_v={self.delta_v}, v_max={self.v_max}"
            )
        if not 0 < self.kink < self.n:
            raise ParameterError(
                f"0 < n/2 + delta_w < n violated: n={self.n}, delta_w={self.delta_w}"
            )
        if self.fluct_f < 0:
            raise ParameterError(f"fluct_f >= 0 violated: fluct_f={self.fluct_f}")

    @property
    def kink(self) -> float:
        """Hamming weight of the barrier top."""
        return self.n / 2 + self.delta_w

    @property
    def slope_low(self) -> float:
        """Per-spin field of the w = 0 basin, ``v_max / (n + 2 delta_w)``."""
        return self.v_max / (self.n + 2 * self.delta_w)

    @property
    def slope_high(self) -> float:
        """Per-spin field of the w = n basin, ``(v_max - delta_v) / (n - 2 delta_w)``."""
        return (self.v_max - self.delta_v) / (self.n - 2 * self.delta_w)

    def describe(self) -> str:
        return (
            f"n={self.n} v_max={self.v_max!r} delta_v={self.delta_v!r} "
            f"delta_w={self.delta_w!r} fluct_f={self.fluct_f!r}"
        )


@dataclass(frozen=True)
class PerN:
    """A parameter proportional to the qubit count: resolves to ``frac * n``."""

    frac: float

    def at(self, n: int) -> float:
        return self.frac * n

    def __str__(self):
        return f"{self.frac!r}N"


def _resolve(value, n):
    if isinstance(value, PerN):
        return value.at(n)
    return float(value)


@dataclass(frozen=True)
class ParamSpec:
    """Size-independent description of a potential family.

    Each entry is either an absolute number or a :class:`PerN` fraction,
    e.g. ``ParamSpec(v_max=PerN(1), delta_v=1.0, delta_w=PerN(-0.25))``.
    """

    v_max: float | PerN
    delta_v: float | PerN
    delta_w: float | PerN
    fluct_f: float | PerN = field(default=0.0)

    def at(self, n: int) -> ModelParams:
        return resolve_params(self, n)

    def describe(self) -> str:
        return (
            f"v_max={self.v_max} delta_v={self.delta_v} "
            f"delta_w={self.delta_w} fluct_f={self.fluct_f}"
        )


def resolve_params(spec: ParamSpec, n: int) -> ModelParams:
    """Evaluate a :class:`ParamSpec` at qubit count ``n``.

    Raises
    ------
    ParameterError
        If ``n < 2`` or the resolved values break a :class:`ModelParams`
        invariant. The message names the violated constraint.
    """
    if int(n) != n or n < 2:
        raise ParameterError(f"n >= 2 violated: n={n!r}")
    n = int(n)
    return ModelParams(
        n=n,
        v_max=_resolve(spec.v_max, n),
        delta_v=_resolve(spec.delta_v, n),
        delta_w=_resolve(spec.delta_w, n),
        fluct_f=_resolve(spec.fluct_f, n),
    )


EXTENSIVE = ParamSpec(v_max=PerN(1.0), delta_v=PerN(0.25), delta_w=PerN(-0.25))
NARROW_BASIN = ParamSpec(v_max=PerN(1.0), delta_v=PerN(0.25), delta_w=PerN(-0.375))
UNIT_GAP = ParamSpec(v_max=PerN(1.0), delta_v=1.0, delta_w=PerN(-0.25))
FLUCTUATING = ParamSpec(
    v_max=PerN(1.0), delta_v=1.0, delta_w=PerN(-0.25), fluct_f=PerN(0.25)
)


def _branches(params: ModelParams, w):
    n = params.n
    rising = params.v_max * w / params.kink
    falling = params.delta_v + (params.v_max - params.delta_v) * (n - w) / (
        n / 2 - params.delta_w
    )
    return np.where(w <= params.kink, rising, falling)


def potential_at(params: ModelParams, w: int) -> float:
    """Potential energy of any bit string with Hamming weight ``w``."""
    if int(w) != w or not 0 <= w <= params.n:
        raise DomainError(f"weight must be an integer in [0, {params.n}], got {w!r}")
    w = int(w)
    value = float(_branches(params, float(w)))
    if w % 2 == 1:
        value += params.fluct_f
    return value


def potential_vector(params: ModelParams) -> np.ndarray:
    """Potential on every weight 0..n, i.e. the diagonal of H_Z in the Dicke basis."""
    w = np.arange(params.n + 1)
    values = _branches(params, w.astype(float))
    return values + params.fluct_f * (w % 2)


def binary_entropy(p: float) -> float:
    """Binary entropy in bits, with 0 log 0 = 0."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"probability must lie in [0, 1], got {p!r}")
    h = 0.0
    for q in (p, 1.0 - p):
        if q > 0.0:
            h -= q * math.log2(q)
    return h


def greedy_exponent_from_fraction(p: float) -> float:
    """``(1 - H(p)) / 2`` for a basin covering a fraction ``p`` of the weight range.

    ``p = 1`` is plain Grover search (C = 1/2).
    """
    return 0.5 * (1.0 - binary_entropy(p))


def greedy_grover_exponent(params: ModelParams) -> float:
    """Runtime exponent C of amplitude-amplified greedy descent.

    Greedy descent from a uniformly random start succeeds when the start
    lies within distance ``n/2 - delta_w`` of the all-zero string. The
    success probability is ``2**(-n (1 - H(p)))`` with
    ``p = (n/2 - delta_w)/n`` and amplitude amplification takes its inverse
    square root, so ``C = (1 - H(p)) / 2``.
    """
    p = (params.n / 2 - params.delta_w) / params.n
    return greedy_exponent_from_fraction(min(max(p, 0.0), 1.0))
