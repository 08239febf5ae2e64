import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from shortpath.errors import DomainError, ParameterError
from shortpath.model import EXTENSIVE, ModelParams, potential_vector
from shortpath.operators import (
    DriverSpec,
    driver_matrix,
    hamiltonian,
    interpolated_hamiltonian,
    is_integer_power,
    psi_plus,
    spectral_power,
    x_matrix,
    x_offdiagonal,
)

from oracles import dicke_embedding, full_x, symmetric_sector


def test_x_single_qubit():
    np.testing.assert_array_equal(x_matrix(1), [[0, 1], [1, 0]])
    np.testing.assert_allclose(np.linalg.eigvalsh(x_matrix(1)), [-1, 1])


def test_x_two_qubits():
    np.testing.assert_allclose(x_offdiagonal(2), [math.sqrt(2), math.sqrt(2)])
    np.testing.assert_allclose(np.linalg.eigvalsh(x_matrix(2)), [-2, 0, 2], atol=1e-14)


@pytest.mark.parametrize("n", range(1, 11))
def test_x_matches_full_space_symmetric_sector(n):
    sector = symmetric_sector(n, full_x(n))
    np.testing.assert_allclose(x_matrix(n), sector, atol=1e-12)


@pytest.mark.parametrize("n", [10, 50, 80])
def test_x_spectrum_is_spin_ladder(n):
    vals = np.linalg.eigvalsh(x_matrix(n))
    np.testing.assert_allclose(vals, np.arange(-n, n + 1, 2), atol=1e-9)


def test_x_rejects_zero():
    with pytest.raises(DomainError):
        x_matrix(0)


def test_psi_plus_two_qubits():
    np.testing.assert_allclose(psi_plus(2), [0.5, 1 / math.sqrt(2), 0.5], rtol=1e-15)


@pytest.mark.parametrize("n", [10, 50, 80, 400])
def test_psi_plus_is_top_eigenvector(n):
    v = psi_plus(n)
    assert abs(np.linalg.norm(v) - 1) < 1e-12
    assert np.all(v > 0)
    np.testing.assert_allclose(x_matrix(n) @ v, n * v, atol=1e-10)


def test_psi_plus_matches_uniform_superposition():
    n = 8
    uniform = np.full(2**n, 2.0 ** (-n / 2))
    np.testing.assert_allclose(dicke_embedding(n).T @ uniform, psi_plus(n), atol=1e-14)


def test_psi_plus_weights_are_binomial():
    n = 30
    amp2 = psi_plus(n) ** 2
    expected = np.array([math.comb(n, w) for w in range(n + 1)]) / 2.0**n
    np.testing.assert_allclose(amp2, expected, rtol=1e-12)


def test_driver_spec_validation():
    with pytest.raises(ParameterError, match="k > 0"):
        DriverSpec(k=0, b=1)
    with pytest.raises(ParameterError, match="b >= 0"):
        DriverSpec(k=1, b=-1)
    with pytest.raises(ParameterError, match="0 <= s <= 1"):
        DriverSpec(k=1, b=1, s=1.5)


def test_integer_detection():
    assert is_integer_power(3 + 5e-10)
    assert not is_integer_power(3 + 1e-8)


@pytest.mark.parametrize("n", [5, 20, 60])
def test_linear_driver_is_scaled_x(n):
    np.testing.assert_allclose(driver_matrix(n, DriverSpec(1, 0.7)), 0.7 * x_matrix(n), rtol=0, atol=1e-10)


def test_linear_driver_through_eigen_route():
    np.testing.assert_allclose(spectral_power(30, 1), x_matrix(30), atol=1e-10)


def test_quadratic_driver_two_qubits():
    d = driver_matrix(2, DriverSpec(2, 1.0))
    x = x_matrix(2)
    np.testing.assert_allclose(d, x @ x / 2, atol=1e-14)
    np.testing.assert_allclose(np.linalg.eigvalsh(d), [0, 2, 2], atol=1e-14)


def test_quadratic_driver_degenerate_top():
    n = 20
    vals = np.linalg.eigvalsh(-driver_matrix(n, DriverSpec(2, 1.0)))
    assert vals[0] == pytest.approx(-n, rel=1e-12)
    assert vals[1] == pytest.approx(-n, rel=1e-12)
    assert vals[2] > -n + 1


@pytest.mark.parametrize("n", [10, 40, 80])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_integer_power_identity(n, k):
    x = x_matrix(n)
    expected = 0.6 * 0.3 * np.linalg.matrix_power(x, k) / n ** (k - 1)
    got = driver_matrix(n, DriverSpec(k, 0.6, 0.3))
    np.testing.assert_allclose(got, expected, rtol=1e-9, atol=1e-9 * np.abs(expected).max())
    np.testing.assert_allclose(spectral_power(n, k), np.linalg.matrix_power(x, k), rtol=0, atol=1e-9 * np.abs(x).max() ** k)


def test_fractional_power_uses_absolute_spectrum():
    n, k = 12, 2.5
    vals = np.sort(np.linalg.eigvalsh(driver_matrix(n, DriverSpec(k, 1.0))))
    expected = np.sort(np.abs(np.arange(-n, n + 1, 2.0)) ** k / n ** (k - 1))
    np.testing.assert_allclose(vals, expected, atol=1e-9)
    assert np.all(vals >= -1e-9)


def test_odd_power_keeps_sign():
    n = 9
    vals = np.linalg.eigvalsh(driver_matrix(n, DriverSpec(3, 1.0)))
    np.testing.assert_allclose(np.sort(vals), np.sort(np.arange(-n, n + 1, 2.0) ** 3 / n**2), atol=1e-9)


def test_zero_field_is_diagonal_potential():
    p = EXTENSIVE.at(16)
    h = hamiltonian(p, DriverSpec(1, 0.0))
    np.testing.assert_array_equal(h, np.diag(potential_vector(p)))
    np.testing.assert_array_equal(hamiltonian(p, DriverSpec(3, 5.0, s=0.0)), h)


@given(
    n=st.integers(2, 60),
    k=st.sampled_from([1, 2, 3, 1.5, 2.7]),
    b=st.floats(0, 3),
    s=st.floats(0, 1),
)
@settings(max_examples=60, deadline=None)
def test_hamiltonian_exactly_symmetric_and_finite(n, k, b, s):
    h = hamiltonian(EXTENSIVE.at(n), DriverSpec(k, b, s))
    assert h.shape == (n + 1, n + 1)
    assert np.array_equal(h, h.T)
    assert np.all(np.isfinite(h))


def test_interpolation_endpoints():
    p = EXTENSIVE.at(10)
    np.testing.assert_array_equal(interpolated_hamiltonian(p, 1.0), np.diag(potential_vector(p)))
    np.testing.assert_array_equal(interpolated_hamiltonian(p, 0.0), -x_matrix(10))
    with pytest.raises(DomainError):
        interpolated_hamiltonian(p, 1.1)


def test_fluctuating_hamiltonian_diagonal():
    p = ModelParams(10, 10, 1, -2.5, fluct_f=2.5)
    h = hamiltonian(p, DriverSpec(3, 0.5))
    np.testing.assert_allclose(np.diag(h) - np.diag(-driver_matrix(10, DriverSpec(3, 0.5))), potential_vector(p), atol=1e-12)
