import numpy as np
import pytest

from src.core.errors import DomainError
from src.services.geometry import symbol
from src.services.oscillator import make_params, measure_mu_weight
from src.services.transformed_coherent import (
    N1z,
    beta_identity,
    beta_sum,
    coherent_energy_transformed,
    measure_h,
    moment_identity,
    normalization_squared,
    phi_z,
    phi_z_norm,
    phi_z_series,
    resolution_check_transformed,
    shifted_energy_by_quadrature,
    zeta1,
    zeta1_series,
)


def test_n1z_at_origin(params):
    assert float(N1z(params, 0.0)) == pytest.approx((4 * params.k + 2 * params.p) ** -0.5)
    assert float(normalization_squared(params, 0.0)) == pytest.approx(1.0)


def test_n1z_is_the_shifted_energy(params):
    z = 0.4 - 0.3j
    expected = 1.0 / float(N1z(params, abs(z) ** 2)) ** 2
    assert shifted_energy_by_quadrature(params, z) == pytest.approx(expected, rel=1e-6)


def test_moment_example(params):
    # k = 1.25, p = 1, n = 0: 1/(2k+1)
    result, rhs = moment_identity(params, 0)
    assert rhs == pytest.approx(2 / 7)
    assert result.value.real == pytest.approx(2 / 7, rel=1e-9)


def test_moment_identity(index_params):
    for n in range(21):
        result, rhs = moment_identity(index_params, n)
        assert result.value.real == pytest.approx(rhs, rel=1e-9)


def test_beta_identity(index_params):
    for n in range(21):
        lhs, rhs = beta_identity(index_params, n)
        assert lhs == pytest.approx(rhs, rel=1e-10)


def test_lowered_beta_index_diverges(params):
    with pytest.raises(DomainError):
        beta_sum(params, 0, first_shift=-1)


def test_measure_reduces_at_p0():
    base = make_params(2.0, 0)
    s = np.linspace(0.05, 0.9, 7)
    np.testing.assert_allclose(measure_h(base, s), measure_mu_weight(base.shifted(), s), rtol=1e-12)


def test_measure_domain(params):
    with pytest.raises(DomainError):
        measure_h(params, 0.0)


def test_resolution_of_identity(params):
    for n in (0, 2, 5):
        assert resolution_check_transformed(params, n, n).value.real == pytest.approx(1.0, abs=1e-8)


def test_zeta1_at_zero(params):
    assert zeta1(params, 0.0, 0.4 + 0.1j) == pytest.approx(1.0)


def test_zeta1_series(params):
    zeta, z = 0.5j, -0.4 + 0.2j
    value, n_terms = zeta1_series(params, zeta, z)
    assert n_terms > 10
    assert value == pytest.approx(zeta1(params, zeta, z), rel=1e-10)


def test_transformed_coherent_state_is_normalized(ctx):
    for z in (0.0, 0.5 + 0.3j, -0.8):
        assert phi_z_norm(ctx, z) == pytest.approx(1.0, abs=1e-8)


def test_transformed_coherent_series(ctx):
    x = np.array([0.7, 2.0])
    np.testing.assert_allclose(phi_z_series(ctx, 0.7, x), phi_z(ctx, 0.7, x), atol=1e-8)


def test_transformed_coherent_energy(ctx):
    z = 0.3 + 0.4j
    expected = symbol(ctx.params, "H1", z).real
    assert coherent_energy_transformed(ctx, z) == pytest.approx(expected, rel=1e-6)
