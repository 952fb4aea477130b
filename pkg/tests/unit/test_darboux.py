import math

import numpy as np
import pytest

from src.core.errors import DomainError, NumericOverflowError, UsageError
from src.core.models import StateVector
from src.services.darboux import (
    A_p,
    L0,
    L0_closed_form,
    factorization_residual_initial,
    factorization_residual_transformed,
    intertwining_residual,
    inverse_residual,
    ladder_matrix_elements,
    log_derivative_residual,
    make_context,
    nonlinear_commutator_check,
    normalization_by_quadrature,
    phi_gram,
    potential_difference_residual,
    small_x_limit,
    transform_residual,
    transformed_eigen_residual,
    u_p,
)
from src.services.oscillator import eigen_state, make_params


def test_log_derivative_sign(short_ctx):
    x = short_ctx.grid.nodes
    np.testing.assert_allclose(L0(short_ctx, x), -L0_closed_form(short_ctx, x), rtol=1e-14)
    assert log_derivative_residual(short_ctx) < 1e-6


def test_transformation_function_solves_h0(short_ctx):
    assert transform_residual(short_ctx) < 1e-6


def test_u_p_overflow_is_reported(ctx):
    with pytest.raises(NumericOverflowError):
        u_p(ctx, np.array([60.0]))


def test_nodal_u_p_is_rejected(params, small_grid, mocker):
    bad = -np.ones(small_grid.size)
    mocker.patch("src.services.darboux.transform._triplet", return_value=(bad, bad, bad))
    with pytest.raises(DomainError):
        make_context(params, small_grid)


def test_potential_difference_p1_closed_form(ctx):
    k = ctx.params.k
    x = np.array([0.3, 1.0, 2.5, 7.0])
    a0 = -1.0 + (4 * k - 1) / x**2
    expected = a0 + 4 / (4 * k + x**2) - 32 * k / (4 * k + x**2) ** 2
    np.testing.assert_allclose(A_p(ctx, x), expected, rtol=1e-12)


def test_potential_difference_is_log_second_derivative(short_ctx):
    assert potential_difference_residual(short_ctx) < 1e-6


@pytest.mark.parametrize("p", [0, 1, 3])
def test_potential_limits(p):
    ctx = make_context(make_params(2.0, p))
    measured, limit = small_x_limit(ctx)
    assert limit == pytest.approx(-1.0 - p / 1.25)
    assert measured == pytest.approx(limit, abs=1e-6)
    assert A_p(ctx, np.array([500.0]))[0] == pytest.approx(-1.0, abs=1e-3)


def test_isospectrality(ctx):
    for n in range(5):
        assert transformed_eigen_residual(ctx, n) < 1e-5


def test_factorizations(ctx):
    for n in range(5):
        assert factorization_residual_initial(ctx, n) < 1e-5
        assert factorization_residual_transformed(ctx, n) < 1e-5


def test_inverse_transformation(ctx):
    for n in range(5):
        assert inverse_residual(ctx, n) < 1e-6


def test_intertwining(ctx):
    psi0 = eigen_state(ctx.params, 0, ctx.grid)
    psi1 = eigen_state(ctx.params, 1, ctx.grid)
    mixed = StateVector(ctx.grid, psi0.values + psi1.values, psi0.derivative + psi1.derivative)
    assert intertwining_residual(ctx, mixed) < 1e-5


def test_intertwining_needs_the_derivative(ctx):
    state = StateVector(ctx.grid, eigen_state(ctx.params, 0, ctx.grid).values)
    with pytest.raises(UsageError):
        intertwining_residual(ctx, state)


def test_normalization_constant(ctx, reference):
    for n in (0, 2, 5):
        expected = 2 * ctx.params.p + 4 * ctx.params.k + 2 * n
        assert normalization_by_quadrature(ctx, n, reference) == pytest.approx(expected, rel=1e-6)


def test_transformed_states_are_orthonormal(ctx, reference):
    np.testing.assert_allclose(phi_gram(ctx, 5, reference), np.eye(6), atol=1e-8)


def test_raising_matrix_element_example():
    ctx = make_context(make_params(2.0, 0))
    p_plus, p_minus = ladder_matrix_elements(ctx, 0)
    assert p_plus == pytest.approx(-math.sqrt(2.5) * math.sqrt(5 * 7))
    assert p_minus == 0.0


def test_nonlinear_commutator(ctx):
    for n in range(11):
        lhs, rhs = nonlinear_commutator_check(ctx, n)
        assert lhs == pytest.approx(rhs, rel=1e-9)
