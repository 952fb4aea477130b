"""
Bergman kernels of both representations and the initial coherent-state
overlap.

    delta0(z, w*) = sum a_n^2 (z w*)^n = (1 - z w*)^(-2k)
    delta1(z, w*) = sum b_n^2 (z w*)^n = (1 - z w*)^(-2k-1) (c - p z w*) / c
"""

from src.core.errors import DomainError
from src.core.models import ModelParams
from src.services.numerics import power_series
from src.services.oscillator import log_coherent_coeff, require_disk
from src.services.transformed_coherent import log_transformed_coeff


def _product(z: complex, w_conj: complex) -> complex:
    t = complex(z) * complex(w_conj)
    if not abs(t) < 1.0:
        raise DomainError(f"kernel needs |z w*| < 1, got {abs(t)}")
    return t


def bergman0(params: ModelParams, z: complex, w_conj: complex) -> complex:
    return (1 - _product(z, w_conj)) ** (-2 * params.k)


def bergman1(params: ModelParams, z: complex, w_conj: complex) -> complex:
    t = _product(z, w_conj)
    return (1 - t) ** (-2 * params.k - 1) * (params.c - params.p * t) / params.c


def bergman0_series(params: ModelParams, z: complex, w_conj: complex, tol: float | None = None) -> tuple[complex, int]:
    return power_series(lambda n: 2 * log_coherent_coeff(params, n), _product(z, w_conj), tol)


def bergman1_series(params: ModelParams, z: complex, w_conj: complex, tol: float | None = None) -> tuple[complex, int]:
    return power_series(lambda n: 2 * log_transformed_coeff(params, n), _product(z, w_conj), tol)


def coherent_overlap_initial(params: ModelParams, zeta: complex, z: complex) -> complex:
    """(1-|zeta|^2)^k (1 - zeta z)^(-2k)."""
    zeta = require_disk(zeta)
    z = require_disk(z)
    return (1 - abs(zeta) ** 2) ** params.k * (1 - zeta * z) ** (-2 * params.k)


def coherent_overlap_series(params: ModelParams, zeta: complex, z: complex, tol: float | None = None) -> tuple[complex, int]:
    zeta = require_disk(zeta)
    z = require_disk(z)
    value, n_terms = power_series(lambda n: 2 * log_coherent_coeff(params, n), zeta * z, tol)
    return (1 - abs(zeta) ** 2) ** params.k * value, n_terms


__all__ = [
    "bergman0",
    "bergman0_series",
    "bergman1",
    "bergman1_series",
    "coherent_overlap_initial",
    "coherent_overlap_series",
]
