import numpy as np
import pytest

from src.core.errors import DomainError, TruncationLossError, UsageError
from src.core.models import HoloSeries, System
from src.services.holomorphic import (
    apply_op_initial,
    apply_op_transformed,
    bergman0,
    bergman0_series,
    bergman1,
    bergman1_series,
    coefficient_inner_product,
    coherent_overlap_initial,
    coherent_overlap_series,
    commutator,
    gram_matrix,
    inner_product_holo,
    monomial,
    compact_p_plus_factor,
    reproducing_check,
)
from src.services.oscillator import make_params

COEFFS = np.array([1.0, 0.5j, -0.3, 0.2, 0.1j, -0.05], dtype=complex)


def test_p_minus_on_z(params):
    image = apply_op_transformed("p-", monomial(params, System.TRANSFORMED, 1))
    assert image.coeffs[0] == pytest.approx(2 * params.c)


def test_factorization_in_the_disk(params):
    for n in range(6):
        state = monomial(params, System.INITIAL, n)
        back = apply_op_transformed("L+", apply_op_transformed("L", state))
        assert back.system is System.INITIAL
        assert back.coeffs[n] == pytest.approx(2 * (n + params.c))


def test_intertwining_in_the_disk(params):
    state = HoloSeries(COEFFS, System.INITIAL, params)
    left = apply_op_transformed("L", apply_op_initial("k0", state))
    right = apply_op_transformed("p0", apply_op_transformed("L", state))
    np.testing.assert_allclose(left.coeffs, right.coeffs, rtol=1e-14)


def test_su11_commutator(params):
    state = monomial(params, System.INITIAL, 4)
    bracket = commutator(apply_op_initial, "k-", "k+", state)
    assert bracket[4] == pytest.approx(2 * (4 + params.k))


def test_compact_p_plus_agrees_only_at_n1(params):
    def derived(n):
        return 2 * (n + 2 * params.k) * (n + params.c + 1)

    assert compact_p_plus_factor(params, 1) == pytest.approx(derived(1))
    assert compact_p_plus_factor(params, 3) != pytest.approx(derived(3))


def test_operator_misuse(params):
    initial = monomial(params, System.INITIAL, 2)
    with pytest.raises(UsageError):
        apply_op_initial("k7", initial)
    with pytest.raises(UsageError):
        apply_op_transformed("p+", initial)
    with pytest.raises(UsageError):
        apply_op_transformed("L+", initial)


def test_truncation_loss_is_reported(params):
    state = monomial(params, System.INITIAL, 10)
    with pytest.raises(TruncationLossError):
        apply_op_initial("k+", state, cap=10)


def test_bergman_kernels(params):
    z, w_conj = 0.5 + 0.2j, 0.3 - 0.6j
    assert bergman0_series(params, z, w_conj)[0] == pytest.approx(bergman0(params, z, w_conj), rel=1e-10)
    assert bergman1_series(params, z, w_conj)[0] == pytest.approx(bergman1(params, z, w_conj), rel=1e-10)
    with pytest.raises(DomainError):
        bergman0(params, 0.99, 1.5)


def test_bergman1_reduces_at_p0():
    base = make_params(2.0, 0)
    z, w_conj = 0.4j, 0.7
    assert bergman1(base, z, w_conj) == pytest.approx(bergman0(base.shifted(), z, w_conj), rel=1e-12)


def test_coherent_overlap(params):
    zeta, z = 0.3 + 0.1j, 0.5
    assert coherent_overlap_series(params, zeta, z)[0] == pytest.approx(
        coherent_overlap_initial(params, zeta, z), rel=1e-10)


@pytest.mark.parametrize("system", list(System))
def test_inner_product_quadrature_matches_coefficients(params, system):
    f = HoloSeries(COEFFS, system, params)
    g = HoloSeries(np.conj(COEFFS[::-1]) + 0.25, system, params)
    quad = inner_product_holo(system, f, g).value
    assert quad == pytest.approx(coefficient_inner_product(system, f, g), rel=1e-6)


@pytest.mark.parametrize("system", list(System))
def test_reproducing_property(params, system):
    f = HoloSeries(COEFFS, system, params)
    value, expected = reproducing_check(params, system, f, 0.4 + 0.3j)
    assert value == pytest.approx(expected, abs=1e-6)


def test_inner_product_rejects_mixed_systems(params):
    f = HoloSeries(COEFFS, System.INITIAL, params)
    g = HoloSeries(COEFFS, System.TRANSFORMED, params)
    with pytest.raises(UsageError):
        inner_product_holo(System.INITIAL, f, g)


def test_inner_product_rejects_aliasing_degrees(params):
    f = monomial(params, System.INITIAL, 40)
    with pytest.raises(UsageError):
        inner_product_holo(System.INITIAL, f, f)


def test_transformed_gram_matrix(params):
    np.testing.assert_allclose(gram_matrix(params, System.TRANSFORMED, 4), np.eye(5), atol=1e-6)
