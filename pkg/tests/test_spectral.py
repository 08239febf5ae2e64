import math

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from shortpath.errors import DomainError, NumericalError
from shortpath.model import EXTENSIVE, UNIT_GAP, ModelParams, potential_vector
from shortpath.operators import DriverSpec, hamiltonian, psi_plus, x_matrix
from shortpath.spectral import (
    RESOLUTION_FACTOR,
    analyze,
    eigensolve,
    lowest_pair,
    path_gap_profile,
    resolution_floor,
)

from oracles import full_ground, full_hamiltonian, raw_potential, symmetric_sector


def test_eigensolve_diagonal():
    vals, vecs = eigensolve(np.diag([3.0, 1.0, 2.0]))
    np.testing.assert_allclose(vals, [1, 2, 3])
    np.testing.assert_allclose(np.abs(vecs), np.eye(3)[:, [1, 2, 0]])


def test_eigensolve_pauli_x():
    vals, vecs = eigensolve(np.array([[0.0, 1.0], [1.0, 0.0]]))
    np.testing.assert_allclose(vals, [-1, 1])
    r = math.sqrt(0.5)
    assert abs(abs(vecs[:, 0] @ np.array([r, -r])) - 1) < 1e-14
    assert abs(abs(vecs[:, 1] @ np.array([r, r])) - 1) < 1e-14


def test_eigensolve_spin_spectrum():
    vals, vecs = eigensolve(x_matrix(40))
    np.testing.assert_allclose(vals, np.arange(-40, 41, 2), atol=1e-9)
    np.testing.assert_allclose(vecs.T @ vecs, np.eye(41), atol=1e-10)


def test_eigensolve_subset_matches_full():
    h = hamiltonian(EXTENSIVE.at(30), DriverSpec(3, 0.4))
    full, _ = eigensolve(h)
    part, vecs = eigensolve(h, count=2)
    assert vecs.shape == (31, 2)
    np.testing.assert_allclose(part, full[:2], atol=1e-12)


def test_eigensolve_rejects_nonfinite():
    m = np.eye(3)
    m[0, 0] = np.nan
    with pytest.raises(NumericalError, match="3x3"):
        eigensolve(m)


def test_eigensolve_rejects_nonsquare():
    with pytest.raises(DomainError):
        eigensolve(np.zeros((2, 3)))


def test_diagonal_case_unit_gap():
    r = analyze(UNIT_GAP.at(40), DriverSpec(1, 0.0))
    assert r.e0 == 0.0
    assert r.e1 == 1.0
    assert r.gap == 1.0
    assert r.overlap == pytest.approx(2.0**-20, rel=1e-12)


def test_zero_field_overlap_is_argmin_amplitude():
    p = EXTENSIVE.at(24)
    r = analyze(p, DriverSpec(1, 0.0))
    w = int(np.argmin(potential_vector(p)))
    assert r.overlap == psi_plus(24)[w]


def test_sign_convention():
    p = EXTENSIVE.at(20)
    for b in (0.1, 0.7, 1.5):
        r = analyze(p, DriverSpec(1, b))
        assert r.ground @ psi_plus(20) >= 0
        assert 0 <= r.overlap <= 1
        assert r.e0 <= r.e1 and r.gap >= 0


def test_one_state_space():
    r = lowest_pair(np.array([[2.5]]), np.array([1.0]))
    assert r.e0 == 2.5 and r.e1 == math.inf and r.overlap == 1.0


def test_resolution_floor_uses_row_sums():
    m = np.array([[1.0, -2.0], [-2.0, 0.5]])
    assert resolution_floor(m) == RESOLUTION_FACTOR * 3.0


def test_small_gap_is_flagged():
    m = np.diag([0.0, 1e-14, 5.0])
    r = lowest_pair(m)
    assert r.below_resolution
    assert r.gap == pytest.approx(1e-14)


def test_extensive_fifty_gap_at_crossing():
    # the avoided crossing is so narrow that a shift of 1e-9 in b matters;
    # the refined minimum itself is checked in the search tests
    near = analyze(EXTENSIVE.at(50), DriverSpec(1, 0.718070335))
    far = analyze(EXTENSIVE.at(50), DriverSpec(1, 0.7))
    assert near.gap < 1e-6 * far.gap
    assert not near.below_resolution


def test_mp_precision_agrees_with_double():
    pytest.importorskip("mpmath")
    p = EXTENSIVE.at(20)
    spec = DriverSpec(1, 0.6)
    a = analyze(p, spec)
    b = analyze(p, spec, precision="mp", dps=40)
    assert b.e0 == pytest.approx(a.e0, rel=1e-12)
    assert b.gap == pytest.approx(a.gap, rel=1e-9)
    with pytest.raises(DomainError):
        analyze(p, spec, precision="quad")


def test_path_profile_endpoint_is_bare_gap():
    p = UNIT_GAP.at(30)
    prof = path_gap_profile(p, 1, 0.5, [0.0, 0.5, 1.0])
    assert list(prof)[0] == (0.0, 1.0)
    assert len(prof) == 3


def test_path_profile_order_unity_below_critical_field():
    # b = 0.7 sits below the gap closing near 0.718
    prof = path_gap_profile(EXTENSIVE.at(50), 1, 0.7, np.linspace(0, 1, 101))
    assert prof.min_gap > 0.1
    assert prof.argmin_s == 1.0


def test_path_profile_threads_match():
    p = EXTENSIVE.at(30)
    grid = np.linspace(0, 1, 37)
    a = path_gap_profile(p, 3, 0.5, grid, threads=1)
    b = path_gap_profile(p, 3, 0.5, grid, threads=6)
    assert list(a) == list(b)


def test_path_profile_validates():
    with pytest.raises(DomainError):
        path_gap_profile(EXTENSIVE.at(10), 1, 0.5, [])
    with pytest.raises(DomainError):
        path_gap_profile(EXTENSIVE.at(10), 1, 0.5, [0.5, 1.2])


draws = st.tuples(
    st.integers(2, 10),
    st.floats(0.2, 2.0),
    st.floats(0.05, 0.95),
    st.floats(0.1, 0.9),
    st.floats(0.05, 2.0),
)


def _params(n, vfrac, dvfrac, kfrac):
    v_max = vfrac * n
    return ModelParams(n, v_max, dvfrac * v_max, (kfrac - 0.5) * n)


def check_against_brute_force(n, vfrac, dvfrac, kfrac, b):
    p = _params(n, vfrac, dvfrac, kfrac)
    res = analyze(p, DriverSpec(1, b))
    h_full = full_hamiltonian(n, raw_potential(n, p.v_max, p.delta_v, p.delta_w), b, 1)
    e0, ground = full_ground(h_full)
    sector = np.linalg.eigvalsh(symmetric_sector(n, h_full))
    uniform_overlap = abs(ground.sum()) / 2 ** (n / 2)
    assert res.e0 == pytest.approx(e0, abs=1e-9)
    assert res.e0 == pytest.approx(sector[0], abs=1e-9)
    assert res.gap == pytest.approx(sector[1] - sector[0], abs=1e-9)
    assert res.overlap == pytest.approx(uniform_overlap, abs=1e-9)


@given(draws)
@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_matches_brute_force(draw):
    check_against_brute_force(*draw)
