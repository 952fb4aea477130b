"""
The measure dnu = h(s) dA that resolves the identity for the transformed
coherent states, and the overlap function zeta1.

h solves the moment problem

    pi int_0^1 h(s) s^n (1-s)^(2k+1) / (c - p s) ds = n! Gamma(2k) / (Gamma(n+2k) (n+c)),

and expanding the left side term by term gives Beta functions
B(n+j+1, c-j). A widely reproduced form of that sum writes the first
argument as n+j-1, which diverges at n = j = 0.
"""

import math

import numpy as np

from src.config.settings import settings
from src.core.errors import DomainError
from src.core.models import ModelParams, QuadratureResult, QuadratureSpec
from src.infrastructure.logging import get_logger
from src.services.numerics import disk_monomial_integral, power_series, radial_integrate, radial_spec
from src.services.oscillator import require_disk
from src.services.specfun import beta, binomial, log_gamma
from src.services.transformed_coherent.states import (
    log_transformed_coeff,
    normalization_squared,
    transformed_coeff,
)

logger = get_logger(__name__)


def measure_h(params: ModelParams, s):
    """(2k-1)/pi (c - p s) sum_j C(p,j) s^j (1-s)^(p-j-2) / (c-j-1) on 0 < s < 1."""
    s_arr = np.asarray(s, dtype=float)
    if np.any(s_arr <= 0) or np.any(s_arr >= 1):
        raise DomainError("measure_h is defined on 0 < s < 1")
    k, p, c = params.k, params.p, params.c
    total = sum(binomial(p, j) * s_arr**j * (1 - s_arr) ** (p - j - 2) / (c - j - 1)
                for j in range(p + 1))
    return (2 * k - 1) / np.pi * (c - p * s_arr) * total


def moment_rhs(params: ModelParams, n: int) -> float:
    k = params.k
    return math.exp(log_gamma(n + 1) + log_gamma(2 * k) - log_gamma(n + 2 * k)) / (n + params.c)


def moment_identity(params: ModelParams, n: int, spec: QuadratureSpec | None = None) -> tuple[QuadratureResult, float]:
    """(quadrature of the moment integral, its closed-form right side).

    The integrand vanishes like (1-s)^(2k-1) at the rim, which the
    Gauss-Jacobi weight absorbs.
    """
    spec = radial_spec(settings.tolerances.moment * 1e-3) if spec is None else spec
    k, p, c = params.k, params.p, params.c

    def integrand(s):
        return np.pi * measure_h(params, s) * s**n * (1 - s) ** (2 * k + 1) / (c - p * s)

    return radial_integrate(integrand, 2 * k - 1, spec), moment_rhs(params, n)


def beta_sum(params: ModelParams, n: int, first_shift: int = 1) -> float:
    """sum_j C(p,j) (2k-1)/(c-j-1) B(n+j+shift, c-j).

    shift = +1 is the exact expansion of the moment integral; shift = -1
    gives the lowered-index variant and fails for n + j < 2.
    """
    k, p, c = params.k, params.p, params.c
    return sum(binomial(p, j) * (2 * k - 1) / (c - j - 1) * beta(n + j + first_shift, c - j)
               for j in range(p + 1))


def beta_identity(params: ModelParams, n: int) -> tuple[float, float]:
    return beta_sum(params, n), moment_rhs(params, n)


def resolution_check_transformed(params: ModelParams, m: int, n: int,
                                 spec: QuadratureSpec | None = None) -> QuadratureResult:
    """<phi_m| int |phi_z><phi_z| dnu |phi_n> in the {phi_n} basis.

    <phi_m|phi_z> = N b_m z^m; the angle is integrated analytically and the
    radial part, which vanishes like (1-s)^(2k-1), by Gauss-Jacobi.
    """
    spec = radial_spec(settings.tolerances.inner_product) if spec is None else spec
    bm, bn = transformed_coeff(params, m), transformed_coeff(params, n)

    def radial_weight(s):
        return bm * bn * normalization_squared(params, s) * measure_h(params, s)

    return disk_monomial_integral(m, n, radial_weight, 2 * params.k - 1, spec)


def resolution_matrix_transformed(params: ModelParams, n_max: int,
                                  spec: QuadratureSpec | None = None) -> np.ndarray:
    out = np.empty((n_max + 1, n_max + 1))
    for m in range(n_max + 1):
        for n in range(n_max + 1):
            out[m, n] = resolution_check_transformed(params, m, n, spec).value.real
    return out


def zeta1(params: ModelParams, zeta: complex, z: complex) -> complex:
    """N^-1-scaled overlap of transformed coherent states.

    (c - p zeta z)/sqrt(c) (1-|zeta|^2)^(k+1/2) (1 - zeta z)^(-2k-1) (c - p|zeta|^2)^(-1/2)
    """
    zeta = require_disk(zeta)
    z = require_disk(z)
    k, p, c = params.k, params.p, params.c
    t = abs(zeta) ** 2
    w = zeta * z
    return ((c - p * w) / math.sqrt(c) * (1 - t) ** (k + 0.5)
            * (1 - w) ** (-2 * k - 1) * (c - p * t) ** -0.5)


def zeta1_series(params: ModelParams, zeta: complex, z: complex, tol: float | None = None) -> tuple[complex, int]:
    """N(zeta) sum b_n^2 (zeta z)^n and the number of terms used."""
    zeta = require_disk(zeta)
    z = require_disk(z)
    value, n_terms = power_series(lambda n: 2 * log_transformed_coeff(params, n), zeta * z, tol)
    return math.sqrt(normalization_squared(params, abs(zeta) ** 2)) * value, n_terms
