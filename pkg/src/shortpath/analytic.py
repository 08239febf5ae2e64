"""
Closed-form estimates from the decoupled-spin picture.

Near each basin the potential is linear in w, and a linear potential plus a
transverse field is a sum of independent single-spin problems. The two
basins therefore have per-spin energies

    E0(b) = h1 - sqrt(h1**2 + b**2),            h1 = v_max / (n + 2 delta_w)
    E1(b) = delta_v/n + h2 - sqrt(h2**2 + b**2), h2 = (v_max - delta_v) / (n - 2 delta_w)

and the gap minimum of ``H_Z - b X`` sits close to where they cross.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotApplicableError, NotFoundError
from .model import ModelParams

__all__ = [
    "CrossingEstimate",
    "decoupled_e0_per_spin",
    "decoupled_e1_per_spin",
    "analytic_crossing",
    "small_field_crossing",
    "k2_transitions",
]


@dataclass(frozen=True)
class CrossingEstimate:
    b_cross: float
    method: str
    residual: float


def decoupled_e0_per_spin(params: ModelParams, b: float) -> float:
    """Per-spin ground energy of the w = 0 basin at field ``b``."""
    h = params.slope_low
    return h - math.hypot(h, b)


def decoupled_e1_per_spin(params: ModelParams, b: float) -> float:
    """Per-spin ground energy of the w = n basin at field ``b``."""
    h = params.slope_high
    return params.delta_v / params.n + h - math.hypot(h, b)


def _difference(params, b):
    return decoupled_e0_per_spin(params, b) - decoupled_e1_per_spin(params, b)


def analytic_crossing(params: ModelParams, tol: float = 1e-13, b_hi: float | None = None) -> CrossingEstimate:
    """Field where the two decoupled basin energies cross.

    Bisection on ``E0 - E1`` over ``[0, b_hi]`` (default
    ``10 * max(h1, h2)``). Without a sign change the minimum of
    ``|E0 - E1|`` is searched by golden section instead and accepted only if
    it is a root to within ``tol``.

    Raises
    ------
    NotFoundError
        If the energies do not cross on the interval.
    """
    from .search import _golden

    if b_hi is None:
        b_hi = 10.0 * max(params.slope_low, params.slope_high)
    lo, hi = 0.0, float(b_hi)
    f_lo, f_hi = _difference(params, lo), _difference(params, hi)
    if f_lo == 0.0:
        return CrossingEstimate(0.0, "decoupled-root", 0.0)
    if np.sign(f_lo) == np.sign(f_hi):
        res = _golden(lambda b: abs(_difference(params, b)), lo, hi, tol)
        if res.fun > tol:
            raise NotFoundError(
                f"E0 and E1 do not cross on [0, {b_hi}] (closest |E0-E1|={res.fun:.3g})"
            )
        return CrossingEstimate(res.x, "decoupled-root", res.fun)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        f_mid = _difference(params, mid)
        if np.sign(f_mid) == np.sign(f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    b = 0.5 * (lo + hi)
    return CrossingEstimate(b, "decoupled-root", abs(_difference(params, b)))


def small_field_crossing(params: ModelParams) -> CrossingEstimate:
    """Crossing of the second-order small-field expansions of E0 and E1.

    ``E0 ~ -b**2 / (2 h1)`` and ``E1 ~ delta_v/n - b**2 / (2 h2)`` meet at

        b = sqrt(2 delta_v / (n (1/h2 - 1/h1)))

    which scales as ``1/sqrt(n)`` for constant ``delta_v``.

    Raises
    ------
    NotApplicableError
        If ``h2 >= h1``: the false minimum's basin is not the wider one, so
        the expansions do not cross.
    """
    h1, h2 = params.slope_low, params.slope_high
    if h2 >= h1:
        raise NotApplicableError(
            f"small-field crossing needs h2 < h1, got h1={h1:.6g}, h2={h2:.6g}"
        )
    if h2 <= 0:
        raise NotApplicableError("h2 must be positive")
    b = math.sqrt(2.0 * params.delta_v / (params.n * (1.0 / h2 - 1.0 / h1)))
    return CrossingEstimate(b, "small-field", abs(_difference(params, b)))


def k2_transitions(params: ModelParams) -> tuple[float, float]:
    """Classical-spin transition fields for the ``b X**2 / n`` driver.

    Around either basin the potential is ``const -/+ h Z``. With
    ``Z^2 + X^2 + Y^2 ~ n^2`` and ``Y = 0``, expanding
    ``|Z| = n - X^2/(2n)`` gives ``X^2 (h/(2n) - b/n)``, which changes
    sign at ``b = h/2``. Hence

        b_wide   = v_max / (2 (n + 2 delta_w))             (w = 0 basin)
        b_narrow = (v_max - delta_v) / (2 (n - 2 delta_w))  (w = n basin)

    With v_max = n, delta_w = -n/4 this gives b_wide = 1 and, for
    delta_v = 1, b_narrow -> 1/3 as n grows.
    """
    return 0.5 * params.slope_low, 0.5 * params.slope_high
