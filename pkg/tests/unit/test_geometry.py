import math

import numpy as np
import pytest

from src.core.errors import ConvergenceError, DomainError, UsageError
from src.core.models import System
from src.services.geometry import (
    coordinate,
    curvature,
    exact_flow,
    g1,
    hamilton_flow,
    metric_from_potential,
    nonpolynomial_residual,
    poisson,
    sample_points,
    symbol,
    symbol_observable,
    symbol_series,
)
from src.services.oscillator import make_params


def test_metric_at_origin(params):
    assert float(g1(params, 0.0)) == pytest.approx(2 * params.k + 1 - params.p / params.c)


@pytest.mark.parametrize("system", list(System))
def test_metric_from_potential(params, system):
    for s in (0.0, 0.3, 0.8, 0.99):
        derived, closed = metric_from_potential(params, system, s)
        assert derived == pytest.approx(closed, rel=1e-8)


def test_metric_domain(params):
    with pytest.raises(DomainError):
        g1(params, 1.0)


def test_initial_curvature_is_constant(barrier_params):
    for z in sample_points(10, 7):
        assert curvature(barrier_params, System.INITIAL, z) == pytest.approx(-2 / barrier_params.k, abs=1e-6)


def test_transformed_curvature_reduces_at_p0():
    base = make_params(2.0, 0)
    for z in (0.0, 0.5j, -0.7 + 0.2j):
        assert curvature(base, System.TRANSFORMED, z) == pytest.approx(-2 / (base.k + 0.5), abs=1e-6)


def test_transformed_curvature_flattens_for_large_barrier():
    big = make_params(1e4, 2)
    assert abs(curvature(big, System.TRANSFORMED, 0.6)) < 0.05


def test_bracket_sign(params):
    z = 0.3 + 0.4j
    bracket = poisson(params, System.INITIAL, coordinate(), symbol_observable(params, "K0"), z)
    assert bracket == pytest.approx(-1j * z, abs=1e-7)


def test_su11_brackets(params):
    z = -0.2 + 0.5j
    k0, kp, km = (symbol_observable(params, w) for w in ("K0", "K+", "K-"))
    assert poisson(params, System.INITIAL, k0, kp, z) == pytest.approx(1j * symbol(params, "K+", z), rel=1e-7)
    assert poisson(params, System.INITIAL, km, kp, z) == pytest.approx(2j * symbol(params, "K0", z), rel=1e-7)


def test_transformed_brackets(params):
    z = 0.45 - 0.1j
    p0, pp = symbol_observable(params, "P0"), symbol_observable(params, "P+")
    assert poisson(params, System.TRANSFORMED, p0, pp, z) == pytest.approx(1j * symbol(params, "P+", z), rel=1e-7)


@pytest.mark.parametrize("which", ["K0", "K+", "K-", "H1", "P0", "P+"])
def test_symbols_from_coefficient_series(params, which):
    z = 0.35 + 0.25j
    assert symbol_series(params, which, z) == pytest.approx(symbol(params, which, z), rel=1e-10)


def test_unknown_symbol(params):
    with pytest.raises(UsageError):
        symbol(params, "Q0", 0.1)


def test_flows_coincide(params):
    t_end = 2 * math.pi
    initial = hamilton_flow(params, System.INITIAL, 0.5, t_end=t_end, dt=2e-3)
    transformed = hamilton_flow(params, System.TRANSFORMED, 0.5, t_end=t_end, dt=2e-3)
    exact = exact_flow(0.5, initial.times)
    assert np.max(np.abs(initial.z - exact)) < 1e-8
    assert np.max(np.abs(transformed.z - initial.z)) < 1e-8
    assert abs(transformed.z[-1] - transformed.z[0]) < 1e-8
    assert transformed.modulus_drift < 1e-9
    assert transformed.energy_drift < 1e-8


def test_flow_needs_a_radial_hamiltonian(params):
    with pytest.raises(UsageError):
        hamilton_flow(params, System.INITIAL, 0.5, t_end=0.1, hamiltonian="K+")


def test_flow_gives_up_on_drift(params, mocker):
    mocker.patch("src.services.geometry.flow._rk4_step", side_effect=lambda f, z, dt: z * 1.01)
    with pytest.raises(ConvergenceError):
        hamilton_flow(params, System.INITIAL, 0.5, t_end=0.01, dt=1e-3)


def test_bracket_algebra_is_not_polynomial_for_p1(params):
    assert nonpolynomial_residual(params) > 1e-3


@pytest.mark.parametrize("t_end, dt", [(1.0, 0.0), (1.0, -1e-3), (1.0, float("nan")), (-1.0, 1e-3),
                                       (float("inf"), 1e-3)])
def test_flow_rejects_bad_time_steps(params, t_end, dt):
    with pytest.raises(UsageError):
        hamilton_flow(params, System.INITIAL, 0.5, t_end=t_end, dt=dt)
