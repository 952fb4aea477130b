import math

import numpy as np
import pytest

from src.core.errors import DomainError
from src.services.numerics import reference_grid
from src.services.oscillator import (
    area_convention,
    casimir_value,
    coherent_coeff,
    coherent_energy,
    coherent_norm,
    coherent_psi,
    coherent_psi_minus_label,
    coherent_psi_series,
    eigen_residual,
    energy,
    ladder_initial,
    make_params,
    psi,
    psi_prime,
    psi_second,
    psi_table,
    require_disk,
    resolution_element,
)


@pytest.mark.parametrize("b, k", [(0.0, 0.75), (2.0, 1.25), (6.0, 1.75), (0.5, 0.5 + math.sqrt(3.0) / 4)])
def test_bargmann_index(b, k):
    params = make_params(b, 1)
    assert params.k == pytest.approx(k, rel=1e-15)
    assert params.alpha == pytest.approx(-2 * (k + 1))
    assert params.alpha < 0 < params.E0


def test_shifted_system_and_planck_constant(params):
    shifted = params.shifted()
    assert shifted.k == pytest.approx(params.k + 0.5)
    assert make_params(shifted.b, 0).k == pytest.approx(shifted.k, rel=1e-14)
    assert params.hbar == pytest.approx(0.4)
    assert params.describe()["hbar"] == params.hbar


def test_invalid_parameters_are_rejected():
    with pytest.raises(DomainError):
        make_params(-1.0, 0)
    with pytest.raises(DomainError):
        make_params(2.0, -1)
    with pytest.raises(DomainError):
        make_params(2.0, 1.5)


def test_spectrum_and_casimir(params):
    assert energy(params, 3) == pytest.approx(6.0 + 2.5)
    assert casimir_value(params) == pytest.approx(3 / 16 - 0.5)
    assert casimir_value(params) == pytest.approx(params.k * (1 - params.k))
    with pytest.raises(DomainError):
        energy(params, -1)


def test_ladder_initial(params):
    k_plus, k_minus, k_zero = ladder_initial(params, 2)
    assert k_plus == pytest.approx(-math.sqrt(3 * 4.5))
    assert k_minus == pytest.approx(-math.sqrt(2 * 3.5))
    assert k_zero == pytest.approx(3.25)
    assert ladder_initial(params, 0)[1] == 0.0


def test_coherent_coefficient_product_oracle(params):
    product = np.prod([(2 * params.k + j) / (j + 1) for j in range(5)])
    a5 = coherent_coeff(params, 5)
    assert a5 < 0
    assert a5**2 == pytest.approx(product, rel=1e-13)


def test_eigenfunctions_are_orthonormal(barrier_params):
    grid = reference_grid(barrier_params, 8)
    table = psi_table(barrier_params, 8, grid.nodes)
    gram = (table * grid.weights) @ table.T
    np.testing.assert_allclose(gram, np.eye(9), atol=1e-8)


def test_psi_rejects_non_positive_x(params):
    with pytest.raises(DomainError):
        psi(params, 0, np.array([0.0, 1.0]))


def test_eigen_relation(barrier_params):
    for n in range(6):
        assert eigen_residual(barrier_params, n) < 1e-6


def test_analytic_derivatives_against_stencil(params):
    x = np.linspace(0.5, 6.0, 1101)
    h = x[1] - x[0]
    for n in (0, 3):
        values = psi(params, n, x)
        d1 = np.gradient(values, h, edge_order=2)
        assert np.max(np.abs(psi_prime(params, n, x) - d1)[5:-5]) < 1e-4
        d2 = np.gradient(d1, h, edge_order=2)
        assert np.max(np.abs(psi_second(params, n, x) - d2)[10:-10]) < 1e-3


def test_coherent_state_is_normalized(params):
    for z in (0.0, 0.5 + 0.3j, -0.9, 0.6j):
        assert coherent_norm(params, z) == pytest.approx(1.0, abs=1e-8)


def test_coherent_series_matches_closed_form(params):
    x = np.array([0.5, 1.3, 3.0])
    z = 0.6
    np.testing.assert_allclose(coherent_psi_series(params, z, x), coherent_psi(params, z, x), atol=1e-8)


def test_minus_label_form_is_the_state_at_minus_z(params):
    x = np.array([0.7, 2.0])
    z = 0.3 - 0.4j
    np.testing.assert_allclose(coherent_psi_minus_label(params, -z, x), coherent_psi(params, z, x), rtol=1e-13)


def test_coherent_labels_live_in_the_disk():
    with pytest.raises(DomainError):
        require_disk(1.0)


def test_coherent_energy_is_twice_k0(params):
    z = 0.5 + 0.2j
    s = abs(z) ** 2
    expected = 2 * params.k * (1 + s) / (1 - s)
    assert coherent_energy(params, z).real == pytest.approx(expected, rel=1e-6)


def test_resolution_of_identity(barrier_params):
    assert resolution_element(barrier_params, 0, 0).value.real == pytest.approx(1.0, abs=1e-8)
    assert resolution_element(barrier_params, 3, 3).value.real == pytest.approx(1.0, abs=1e-8)
    assert resolution_element(barrier_params, 1, 2).value == 0.0


def test_full_disk_measure_is_the_area_element(params):
    e00 = resolution_element(params, 0, 0, full_disk=True).value.real
    assert e00 == pytest.approx(1.0, abs=1e-8)
    assert area_convention(e00) == "area"
    assert area_convention(2.0) == "double"
