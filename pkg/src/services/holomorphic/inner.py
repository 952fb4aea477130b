"""
Weighted inner products on the holomorphic representations.

    initial:      <f|g> = int conj(f) g e^(-f0) dmu,  e^(-f0) = (1-s)^(2k)
    transformed:  <f|g> = int conj(f) g e^(-f1) dnu,  e^(-f1) = N^2(s)

Both integrands vanish at the rim like (1-s)^(2k-2) and (1-s)^(2k-1)
respectively, which the radial Gauss-Jacobi rule absorbs.
"""

import numpy as np

from src.config.settings import settings
from src.core.errors import UsageError
from src.core.models import HoloSeries, ModelParams, QuadratureResult, QuadratureSpec, System
from src.infrastructure.logging import get_logger
from src.services.numerics import disk_integrate, radial_spec
from src.services.oscillator import coherent_coeff, measure_mu_weight
from src.services.transformed_coherent import measure_h, normalization_squared, transformed_coeff

logger = get_logger(__name__)


def basis_coeff(params: ModelParams, system: System, n: int) -> float:
    """a_n or b_n: psi_n(z) = a_n z^n, phi_n(z) = b_n z^n."""
    return coherent_coeff(params, n) if system is System.INITIAL else transformed_coeff(params, n)


def rim_exponent(params: ModelParams, system: System) -> float:
    return 2 * params.k - 2 if system is System.INITIAL else 2 * params.k - 1


def radial_density(params: ModelParams, system: System, s):
    """e^(-f) times the measure density against dA."""
    if system is System.INITIAL:
        return (1 - s) ** (2 * params.k) * measure_mu_weight(params, s)
    return normalization_squared(params, s) * measure_h(params, s)


def inner_product_holo(system: System, first: HoloSeries, second: HoloSeries,
                       spec: QuadratureSpec | None = None) -> QuadratureResult:
    """<first|second> by disk quadrature (trapezoid in angle, Gauss-Jacobi in s)."""
    if first.system is not system or second.system is not system:
        raise UsageError(
            f"inner product in the {system.value} system got {first.system.value}/{second.system.value} series")
    if first.degree + second.degree >= settings.quadrature.angular_nodes:
        raise UsageError("series degree too high for the angular rule; raise quadrature.angular_nodes")
    params = first.params
    spec = radial_spec(settings.tolerances.inner_product) if spec is None else spec

    def integrand(z):
        s = np.abs(z) ** 2
        return np.conj(first(z)) * second(z) * radial_density(params, system, s)

    return disk_integrate(integrand, rim_exponent(params, system), spec)


def coefficient_inner_product(system: System, first: HoloSeries, second: HoloSeries) -> complex:
    """sum conj(c_n) c'_n / |basis_n|^2, the same pairing without quadrature."""
    params = first.params
    size = min(first.coeffs.size, second.coeffs.size)
    norms = np.array([basis_coeff(params, system, n) ** 2 for n in range(size)])
    return complex(np.sum(np.conj(first.coeffs[:size]) * second.coeffs[:size] / norms))


def kernel_series(params: ModelParams, system: System, z0: complex, degree: int) -> HoloSeries:
    """delta(., conj(z0)) truncated at `degree`: coefficients basis_n^2 conj(z0)^n."""
    coeffs = np.array([basis_coeff(params, system, n) ** 2 * np.conj(z0) ** n for n in range(degree + 1)],
                      dtype=complex)
    return HoloSeries(coeffs, system, params)


def reproducing_check(params: ModelParams, system: System, f: HoloSeries, z0: complex,
                      spec: QuadratureSpec | None = None) -> tuple[complex, complex]:
    """(<delta(., conj(z0))|f> by quadrature, f(z0)).

    Kernel terms above deg f are orthogonal to f, and keeping them would
    alias against the finite angular rule, so the kernel is cut at deg f.
    """
    kernel = kernel_series(params, system, z0, f.degree)
    value = inner_product_holo(system, kernel, f, spec).value
    return value, complex(f(complex(z0)))


def gram_matrix(params: ModelParams, system: System, n_max: int,
                spec: QuadratureSpec | None = None) -> np.ndarray:
    """<basis_m(z)|basis_n(z)> for m, n <= n_max, each entry by full disk quadrature."""
    basis = []
    for n in range(n_max + 1):
        coeffs = np.zeros(n + 1, dtype=complex)
        coeffs[n] = basis_coeff(params, system, n)
        basis.append(HoloSeries(coeffs, system, params))
    out = np.empty((n_max + 1, n_max + 1), dtype=complex)
    for m, left in enumerate(basis):
        for n, right in enumerate(basis):
            out[m, n] = inner_product_holo(system, left, right, spec).value
    logger.debug("Gram matrix measured", system=system.value, n_max=n_max,
                 max_deviation=float(np.max(np.abs(out - np.eye(n_max + 1)))))
    return out
