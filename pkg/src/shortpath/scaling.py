"""
Runtime exponents C (time ~ 2**(C n)) across system sizes.

* short path: time ~ 1/overlap of the s = 1 ground state with psi_plus
* adiabatic: time ~ 1/gap_min**2 over the family ``H_Z - b X``
  (``1/gap_min`` with the Roland-Cerf local schedule)
* Groverized greedy descent: closed form from the basin volume
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._parallel import ordered_map
from .errors import DomainError, NoDataError
from .model import ParamSpec, greedy_grover_exponent
from .operators import DriverSpec
from .search import DEFAULT_COARSE_POINTS, DEFAULT_GAP_TOL, min_gap
from .spectral import analyze

__all__ = [
    "ScalingRow",
    "ScalingReport",
    "ComparisonReport",
    "BRUTE_FORCE_C",
    "GROVER_C",
    "shortpath_exponent",
    "adiabatic_exponent",
    "adiabatic_crossover",
    "greedy_report",
    "comparison_report",
]

BRUTE_FORCE_C = 1.0
GROVER_C = 0.5
# c_n spread (relative to the largest) beyond which C is not treated as constant
CONSTANT_C_SPREAD = 0.15

ALGORITHMS = ("short-path", "adiabatic", "adiabatic-roland-cerf", "greedy-grover")


@dataclass(frozen=True)
class ScalingRow:
    """One system size.

    ``value`` is the measured quantity (overlap or minimum gap) and ``b``
    the field it was measured at. Flagged rows are excluded from the fit.
    """

    n: int
    c_n: float
    value: float
    b: float
    flagged: bool = False
    note: str = ""


@dataclass(frozen=True)
class ScalingReport:
    algorithm: str
    rows: tuple[ScalingRow, ...]
    fitted_c: float
    params_spec: ParamSpec
    driver: DriverSpec | None = None
    constant_c: bool = True
    warnings: tuple[str, ...] = field(default=())

    @property
    def per_n(self) -> list[tuple[int, float]]:
        return [(r.n, r.c_n) for r in self.rows]

    @property
    def usable(self) -> list[ScalingRow]:
        return [r for r in self.rows if not r.flagged]

    @property
    def headline_c(self) -> float:
        """c_n at the largest size that was resolved."""
        usable = self.usable
        return usable[-1].c_n if usable else float("nan")


def _fit_slope(ns, logtimes) -> float:
    # least-squares slope of log2(time) against n
    if len(ns) < 2:
        return logtimes[0] / ns[0] if ns else float("nan")
    return float(np.polyfit(np.asarray(ns, float), np.asarray(logtimes, float), 1)[0])


def _is_constant(cs) -> bool:
    if len(cs) < 2:
        return True
    hi = max(abs(c) for c in cs)
    return hi == 0 or (max(cs) - min(cs)) / hi <= CONSTANT_C_SPREAD


def _sizes(n_list):
    ns = sorted(int(n) for n in n_list)
    if not ns:
        raise DomainError("n_list must be non-empty")
    return ns


def shortpath_exponent(
    spec: ParamSpec,
    k: float,
    b: float,
    n_list: Sequence[int],
    check_field: bool = True,
    threads: int = 1,
) -> ScalingReport:
    """Short-path exponent from the overlap of the s = 1 ground state with psi_plus.

    ``c_n = -log2(overlap)/n``; ``fitted_c`` is the least-squares slope of
    ``-log2(overlap)`` against n. With ``check_field`` the gap minimum is
    located in ``[b/2, 2b]`` at each size and a warning is issued if ``b``
    lies above it.
    """
    ns = _sizes(n_list)
    driver = DriverSpec(k=k, b=b, s=1.0)
    notes = []

    def one(n):
        params = spec.at(n)
        res = analyze(params, driver)
        logtime = -math.log2(res.overlap) if res.overlap > 0 else math.inf
        flagged = res.overlap < 2.0 ** (-n)
        note = "overlap below 2^-n" if flagged else f"gap(s=1)={res.gap:.6g}"
        critical = None
        if check_field and b > 0:
            m = min_gap(params, k, 1.0, (0.5 * b, 2.0 * b))
            if m.b_min <= b and not m.no_bracket:
                critical = f"n={n}: b={b} is above the gap minimum at b={m.b_min:.6g}"
        return ScalingRow(n, logtime / n, res.overlap, b, flagged, note), critical

    out = ordered_map(one, ns, threads)
    for _, critical in out:
        if critical:
            warnings.warn(critical, RuntimeWarning, stacklevel=2)
            notes.append(critical)
    rows = tuple(r for r, _ in out)
    usable = [r for r in rows if not r.flagged]
    fitted = _fit_slope([r.n for r in usable], [r.c_n * r.n for r in usable]) if usable else float("nan")
    return ScalingReport(
        algorithm="short-path",
        rows=rows,
        fitted_c=fitted,
        params_spec=spec,
        driver=driver,
        constant_c=_is_constant([r.c_n for r in usable]),
        warnings=tuple(notes),
    )


def adiabatic_exponent(
    spec: ParamSpec,
    n_list: Sequence[int],
    b_range: tuple[float, float] = (0.0, 2.0),
    roland_cerf: bool = False,
    coarse_points: int = DEFAULT_COARSE_POINTS,
    tol: float = DEFAULT_GAP_TOL,
    threads: int = 1,
) -> ScalingReport:
    """Adiabatic exponent from the minimum gap of ``H_Z - b X`` over ``b_range``.

    ``c_n = -2 log2(gap_min)/n``, halved with ``roland_cerf``. Sizes whose
    minimum gap is below the resolution floor are kept as flagged rows and
    left out of the fit.

    Raises
    ------
    NoDataError
        If no size has a resolvable minimum gap.
    """
    ns = _sizes(n_list)
    power = 1.0 if roland_cerf else 2.0

    def one(n):
        m = min_gap(spec.at(n), 1.0, 1.0, b_range, coarse_points, tol)
        logtime = -power * math.log2(m.gap_min) if m.gap_min > 0 else math.inf
        note = "below resolution" if m.below_resolution else ""
        return ScalingRow(n, logtime / n, m.gap_min, m.b_min, m.below_resolution, note)

    rows = tuple(ordered_map(one, ns, threads))
    usable = [r for r in rows if not r.flagged]
    if not usable:
        raise NoDataError("minimum gap is below the resolution floor at every size")
    notes = []
    dropped = [r.n for r in rows if r.flagged]
    if dropped:
        msg = f"sizes {dropped} dropped: minimum gap below resolution"
        warnings.warn(msg, RuntimeWarning, stacklevel=2)
        notes.append(msg)
    constant = _is_constant([r.c_n for r in usable])
    if not constant:
        notes.append("c_n is not constant in n (super-exponential gap closing)")
    return ScalingReport(
        algorithm="adiabatic-roland-cerf" if roland_cerf else "adiabatic",
        rows=rows,
        fitted_c=_fit_slope([r.n for r in usable], [r.c_n * r.n for r in usable]),
        params_spec=spec,
        driver=DriverSpec(k=1.0, b=usable[-1].b, s=1.0),
        constant_c=constant,
        warnings=tuple(notes),
    )


def adiabatic_crossover(report: ScalingReport) -> int | None:
    """Smallest resolved n at which the adiabatic time estimate exceeds 2**n."""
    for r in report.usable:
        if r.c_n > BRUTE_FORCE_C:
            return r.n
    return None


def greedy_report(spec: ParamSpec, n_list: Sequence[int]) -> ScalingReport:
    ns = _sizes(n_list)
    rows = []
    for n in ns:
        c = greedy_grover_exponent(spec.at(n))
        rows.append(ScalingRow(n, c, 2.0 ** (-c * n), float("nan"), False, "closed form"))
    return ScalingReport(
        algorithm="greedy-grover",
        rows=tuple(rows),
        fitted_c=_fit_slope(ns, [r.c_n * r.n for r in rows]),
        params_spec=spec,
    )


@dataclass(frozen=True)
class ComparisonReport:
    """Exponents of every algorithm for one potential family.

    ``greedy`` is ``None`` when the potential carries parity fluctuations,
    which trap greedy descent.
    """

    shortpath: ScalingReport
    adiabatic: ScalingReport | None
    adiabatic_rc: ScalingReport | None
    greedy: ScalingReport | None
    errors: dict = field(default_factory=dict)

    def table(self) -> list[tuple[str, float | None, float | None, str]]:
        """Rows ``(algorithm, headline C, fitted C, note)`` plus the two baselines."""
        out = []
        for name, rep in (
            ("short-path", self.shortpath),
            ("adiabatic", self.adiabatic),
            ("adiabatic-roland-cerf", self.adiabatic_rc),
            ("greedy-grover", self.greedy),
        ):
            if rep is None:
                out.append((name, None, None, self.errors.get(name, "N/A")))
            else:
                out.append((name, rep.headline_c, rep.fitted_c, "; ".join(rep.warnings)))
        out.append(("brute-force", BRUTE_FORCE_C, BRUTE_FORCE_C, "baseline"))
        out.append(("grover", GROVER_C, GROVER_C, "baseline"))
        return out


def comparison_report(
    spec: ParamSpec,
    k: float,
    b: float,
    n_list: Sequence[int],
    b_range: tuple[float, float] = (0.0, 2.0),
    coarse_points: int = DEFAULT_COARSE_POINTS,
    tol: float = DEFAULT_GAP_TOL,
    check_field: bool = True,
    threads: int = 1,
) -> ComparisonReport:
    """Short path, adiabatic (plain and Roland-Cerf), and Groverized greedy side by side.

    The adiabatic rows are computed once and the Roland-Cerf row is the
    same data with the exponent halved. A failure in one row is recorded in
    ``errors`` and leaves the others intact.
    """
    errors = {}
    sp = shortpath_exponent(spec, k, b, n_list, check_field=check_field, threads=threads)
    try:
        ad = adiabatic_exponent(spec, n_list, b_range, False, coarse_points, tol, threads)
        rc = ScalingReport(
            algorithm="adiabatic-roland-cerf",
            rows=tuple(
                ScalingRow(r.n, 0.5 * r.c_n, r.value, r.b, r.flagged, r.note) for r in ad.rows
            ),
            fitted_c=0.5 * ad.fitted_c,
            params_spec=spec,
            driver=ad.driver,
            constant_c=ad.constant_c,
            warnings=ad.warnings,
        )
    except NoDataError as exc:
        ad = rc = None
        errors["adiabatic"] = errors["adiabatic-roland-cerf"] = str(exc)
    probe = spec.at(_sizes(n_list)[0])
    if probe.fluct_f > 0:
        greedy = None
        errors["greedy-grover"] = "N/A: fluctuations trap greedy descent"
    else:
        greedy = greedy_report(spec, n_list)
    return ComparisonReport(sp, ad, rc, greedy, errors)
