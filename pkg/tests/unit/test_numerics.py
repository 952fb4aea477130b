import math

import numpy as np
import pytest
from scipy import special

from src.core.errors import ConvergenceError, UsageError
from src.config.settings import QuadratureSettings
from src.core.models import GridKind, QuadratureSpec, Scheme
from src.services.numerics import (
    d1_uniform,
    d2_uniform,
    disk_integrate,
    disk_monomial_integral,
    disk_rule,
    jacobi_rule,
    legendre_panels,
    power_series,
    radial_integrate,
    radial_spec,
    reference_grid,
    stencil_d1,
    stencil_d2,
    truncation_order,
    uniform_grid,
    wirtinger,
    window_max,
)


def test_legendre_panels_integrate_polynomials_exactly():
    x, w = legendre_panels(0.0, 3.0, 4, 5)
    assert np.sum(w * x**7) == pytest.approx(3.0**8 / 8, rel=1e-13)


def test_reference_grid_is_gauss(params):
    grid = reference_grid(params, 4, total_nodes=400, panels=8)
    assert grid.kind is GridKind.GAUSS
    assert grid.nodes.size == 400
    assert grid.integrate(np.exp(-grid.nodes**2)) == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-12)


def test_uniform_grid_needs_five_nodes():
    with pytest.raises(UsageError):
        uniform_grid(0.1, 1.0, 4)


def test_jacobi_rule_absorbs_rim_power():
    # int_0^1 s^2 (1-s)^gamma ds = B(3, gamma+1)
    gamma = 0.5
    s, w = jacobi_rule(20, gamma)
    assert np.all((s > 0) & (s < 1))
    assert np.sum(w * s**2) == pytest.approx(special.beta(3, gamma + 1), rel=1e-13)


def test_radial_integrate_singular_rim():
    gamma = -0.5
    spec = radial_spec(1e-12)
    result = radial_integrate(lambda s: s**3 * (1 - s) ** gamma, gamma, spec)
    assert result.value.real == pytest.approx(special.beta(4, gamma + 1), rel=1e-11)
    assert result.residual <= 1e-12 * max(1.0, abs(result.value))


def test_disk_rule_needs_64_angles():
    with pytest.raises(UsageError):
        disk_rule(radial_spec(1e-10), 0.0, angular_nodes=32)


def test_disk_integrate_area_and_moments():
    spec = radial_spec(1e-12)
    area = disk_integrate(lambda z: np.ones_like(z, dtype=float), 0.0, spec)
    assert area.value.real == pytest.approx(math.pi, rel=1e-12)
    # int |z|^4 dA = pi/3
    quartic = disk_integrate(lambda z: np.abs(z) ** 4, 0.0, spec)
    assert quartic.value.real == pytest.approx(math.pi / 3, rel=1e-12)


def test_disk_monomial_integral_orthogonality():
    spec = radial_spec(1e-12)
    assert disk_monomial_integral(2, 3, lambda s: np.ones_like(s), 0.0, spec).value == 0.0
    diag = disk_monomial_integral(2, 2, lambda s: np.ones_like(s), 0.0, spec)
    assert diag.value.real == pytest.approx(math.pi / 3, rel=1e-12)


def test_convergence_failure_carries_both_values():
    # a rim singularity the rule was not told about never settles
    spec = QuadratureSpec(scheme=Scheme.LEGENDRE, nodes=4, s_max=1.0 - 1e-12, tolerance=1e-14, max_doublings=2)
    with pytest.raises(ConvergenceError) as info:
        radial_integrate(lambda s: (1 - s) ** -0.9, 0.0, spec)
    assert math.isfinite(info.value.residual)
    assert info.value.residual > 0


def test_stencils_are_exact_on_quartics():
    h = 0.1
    x = 1.0 + h * np.arange(-2, 3)
    f = x**4
    assert stencil_d2(f, h) == pytest.approx(12.0, rel=1e-10)
    assert stencil_d1(f, h) == pytest.approx(4.0, rel=1e-10)


def test_stencil_window_size_is_enforced():
    with pytest.raises(UsageError):
        stencil_d2([1.0, 2.0, 3.0], 0.1)


def test_uniform_stencils_including_edges():
    x = np.linspace(0.0, 2.0, 41)
    h = x[1] - x[0]
    f = x**3 - 2 * x
    np.testing.assert_allclose(d1_uniform(f, h), 3 * x**2 - 2, atol=1e-10)
    np.testing.assert_allclose(d2_uniform(f, h), 6 * x, atol=1e-9)


def test_wirtinger_derivatives():
    def F(z):
        return z**2 * np.conj(z)

    z = 0.3 + 0.2j
    dz, dzbar = wirtinger(F, z)
    assert dz == pytest.approx(2 * z * np.conj(z), abs=1e-10)
    assert dzbar == pytest.approx(z**2, abs=1e-10)


def test_window_max_ignores_small_x():
    x = np.array([0.1, 0.4, 0.6, 1.0])
    assert window_max(x, np.array([100.0, 50.0, 2.0, -3.0])) == 3.0
    with pytest.raises(UsageError):
        window_max(x, x, x_min=5.0)


def test_power_series_geometric():
    total, n_terms = power_series(lambda n: 0.0, 0.5, tol=1e-15)
    assert total == pytest.approx(2.0, rel=1e-14)
    assert n_terms > 40


def test_truncation_order_gives_up():
    with pytest.raises(ConvergenceError):
        truncation_order(lambda n: 1.0, tol=1e-10, cap=50)


def test_radial_spec_takes_explicit_quadrature_settings():
    spec = radial_spec(1e-9, quadrature=QuadratureSettings(radial_nodes=24, max_doublings=2))
    assert (spec.nodes, spec.max_doublings, spec.tolerance) == (24, 2, 1e-9)
    assert spec.scheme == Scheme.JACOBI
