import math
import warnings

import numpy as np
import pytest

from shortpath.errors import DomainError, NoDataError
from shortpath.model import EXTENSIVE, FLUCTUATING, NARROW_BASIN, UNIT_GAP, greedy_grover_exponent
from shortpath.operators import DriverSpec
from shortpath.scaling import (
    BRUTE_FORCE_C,
    GROVER_C,
    adiabatic_crossover,
    adiabatic_exponent,
    comparison_report,
    greedy_report,
    shortpath_exponent,
)
from shortpath.search import min_gap
from shortpath.spectral import analyze

SIZES = range(30, 51, 2)


@pytest.fixture(scope="module")
def extensive_report():
    return comparison_report(EXTENSIVE, 1, 0.7, SIZES)


def test_shortpath_rows_from_overlap():
    rep = shortpath_exponent(EXTENSIVE, 1, 0.7, [30, 40])
    for row in rep.rows:
        ov = analyze(EXTENSIVE.at(row.n), DriverSpec(1, 0.7)).overlap
        assert row.value == ov
        assert row.c_n == pytest.approx(-math.log2(ov) / row.n, rel=1e-15)
    assert [r.n for r in rep.rows] == [30, 40]


def test_shortpath_fit_is_slope_of_log_time():
    rep = shortpath_exponent(EXTENSIVE, 1, 0.7, [30, 40, 50])
    ns = np.array([r.n for r in rep.rows])
    t = np.array([r.c_n * r.n for r in rep.rows])
    assert rep.fitted_c == pytest.approx(np.polyfit(ns, t, 1)[0], rel=1e-12)
    assert math.isfinite(rep.fitted_c)


def test_shortpath_drift_small_and_increasing(extensive_report):
    cs = [r.c_n for r in extensive_report.shortpath.rows]
    assert all(b >= a for a, b in zip(cs, cs[1:]))
    assert cs[-1] - cs[0] <= 0.02


def test_shortpath_warns_above_critical_field():
    with pytest.warns(RuntimeWarning, match="above the gap minimum"):
        rep = shortpath_exponent(EXTENSIVE, 1, 0.75, [30])
    assert rep.warnings


def test_shortpath_sizes_sorted_and_validated():
    rep = shortpath_exponent(EXTENSIVE, 1, 0.7, [40, 30], check_field=False)
    assert [r.n for r in rep.rows] == [30, 40]
    with pytest.raises(DomainError):
        shortpath_exponent(EXTENSIVE, 1, 0.7, [])


def test_headline_is_largest_size(extensive_report):
    sp = extensive_report.shortpath
    assert sp.headline_c == sp.rows[-1].c_n


def test_adiabatic_rows_from_min_gap():
    rep = adiabatic_exponent(EXTENSIVE, [30, 40])
    for row in rep.rows:
        m = min_gap(EXTENSIVE.at(row.n), 1)
        assert row.value == m.gap_min
        assert row.c_n == pytest.approx(-2 * math.log2(m.gap_min) / row.n)


def test_roland_cerf_halves_exactly():
    a = adiabatic_exponent(EXTENSIVE, [30, 36, 40])
    b = adiabatic_exponent(EXTENSIVE, [30, 36, 40], roland_cerf=True)
    for x, y in zip(a.rows, b.rows):
        assert y.c_n == 0.5 * x.c_n
    assert b.algorithm == "adiabatic-roland-cerf"


def test_adiabatic_drops_unresolved_sizes():
    with pytest.warns(RuntimeWarning, match="dropped"):
        rep = adiabatic_exponent(NARROW_BASIN, [30, 40, 44])
    assert [r.flagged for r in rep.rows] == [False, True, True]
    assert rep.headline_c == rep.rows[0].c_n


def test_adiabatic_all_unresolved():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        with pytest.raises(NoDataError):
            adiabatic_exponent(UNIT_GAP, [60], b_range=(0, 1))


def test_unit_gap_exponent_grows_with_size():
    rep = adiabatic_exponent(UNIT_GAP, range(4, 21, 2))
    cs = [r.c_n for r in rep.usable]
    assert all(b > a for a, b in zip(cs, cs[1:]))
    assert not rep.constant_c
    assert any("not constant" in w for w in rep.warnings)


def test_unit_gap_crossover_small():
    rep = adiabatic_exponent(UNIT_GAP, range(4, 21, 2))
    assert adiabatic_crossover(rep) == 6
    rc = adiabatic_exponent(UNIT_GAP, range(4, 21, 2), roland_cerf=True)
    assert adiabatic_crossover(rc) == 12
    assert next(r for r in rc.rows if r.n == 10).c_n == pytest.approx(1.0, abs=0.01)


def test_greedy_rows_constant():
    rep = greedy_report(EXTENSIVE, SIZES)
    cs = {r.c_n for r in rep.rows}
    assert len(cs) == 1
    assert cs.pop() == greedy_grover_exponent(EXTENSIVE.at(40))
    assert rep.fitted_c == pytest.approx(rep.headline_c, rel=1e-12)


def test_comparison_table(extensive_report):
    table = extensive_report.table()
    names = [r[0] for r in table]
    assert names == [
        "short-path",
        "adiabatic",
        "adiabatic-roland-cerf",
        "greedy-grover",
        "brute-force",
        "grover",
    ]
    c = {r[0]: r[1] for r in table}
    assert c["brute-force"] == BRUTE_FORCE_C == 1.0
    assert c["grover"] == GROVER_C == 0.5
    assert c["adiabatic-roland-cerf"] == 0.5 * c["adiabatic"]
    assert round(c["short-path"], 2) == 0.29
    assert round(c["greedy-grover"], 3) == 0.094


def test_halved_adiabatic_still_slower(extensive_report):
    assert extensive_report.adiabatic_rc.headline_c > extensive_report.shortpath.headline_c


def test_fluctuations_exclude_greedy():
    rep = comparison_report(FLUCTUATING, 3, 0.65, [20, 24], check_field=False)
    assert rep.greedy is None
    row = next(r for r in rep.table() if r[0] == "greedy-grover")
    assert row[1] is None and "N/A" in row[3]
