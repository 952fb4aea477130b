"""
Transformed coherent states phi_z = N1z L psi_z = N sum b_n z^n phi_n.

    N1z^-2 = (4k + 2p - 2p s) / (1 - s)
    b_n    = a_n sqrt((n + c) / c),              c = 2k + p
    N^2    = (1 - s)^(2k+1) c / (c - p s)
"""

import math

import numpy as np

from src.core.errors import DomainError
from src.core.models import DarbouxContext, ModelParams, RadialGrid
from src.services.darboux import L0, phi
from src.services.numerics import truncation_order
from src.services.oscillator import (
    coherent_coeff,
    coherent_grid,
    coherent_psi,
    log_coherent_coeff,
    require_disk,
    require_positive,
)


def _check_s(s) -> np.ndarray:
    s = np.asarray(s, dtype=float)
    if np.any(s < 0) or np.any(s >= 1):
        raise DomainError("s = |z|^2 must lie in [0, 1)")
    return s


def N1z(params: ModelParams, s):
    s = _check_s(s)
    return np.sqrt((1 - s) / (4 * params.k + 2 * params.p - 2 * params.p * s))


def normalization_squared(params: ModelParams, s):
    """N^2 = (1-s)^(2k+1) c / (c - p s); also e^(-f1)."""
    s = _check_s(s)
    c = params.c
    return (1 - s) ** (2 * params.k + 1) * c / (c - params.p * s)


def log_transformed_coeff(params: ModelParams, n: int) -> float:
    """ln |b_n|."""
    return log_coherent_coeff(params, n) + 0.5 * math.log((n + params.c) / params.c)


def transformed_coeff(params: ModelParams, n: int) -> float:
    """b_n = a_n N_0 / N_n, sign of a_n kept."""
    return coherent_coeff(params, n) * math.sqrt((n + params.c) / params.c)


def phi_z(ctx: DarbouxContext, z: complex, x):
    """N1z (L psi_z)(x) with the analytic derivative of psi_z."""
    z = require_disk(z)
    x = require_positive(x)
    k = ctx.params.k
    beta = (1 - z) / (1 + z)
    psi_z = coherent_psi(ctx.params, z, x)
    psi_z_prime = psi_z * ((2 * k - 0.5) / x - beta * x / 2)
    return N1z(ctx.params, abs(z) ** 2) * (-L0(ctx, x) * psi_z + psi_z_prime)


def phi_z_series(ctx: DarbouxContext, z: complex, x, tol: float | None = None):
    """N sum b_n z^n phi_n(x), cut where |b_n z^n| is negligible."""
    z = require_disk(z)
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(require_positive(x))
    params = ctx.params
    r = abs(z)

    def size(n: int) -> float:
        if r == 0.0:
            return 1.0 if n == 0 else 0.0
        return math.exp(log_transformed_coeff(params, n) + n * math.log(r))

    n_terms = truncation_order(size, tol)
    total = np.zeros(x.shape, dtype=complex)
    for n in range(n_terms):
        total += transformed_coeff(params, n) * z**n * phi(ctx, n, x)
    total *= math.sqrt(normalization_squared(params, r**2))
    return total[0] if scalar else total


def phi_z_norm(ctx: DarbouxContext, z: complex, grid: RadialGrid | None = None) -> float:
    grid = coherent_grid(ctx.params, z) if grid is None else grid
    return float(grid.integrate(np.abs(phi_z(ctx, z, grid.nodes)) ** 2).real)


def shifted_energy_by_quadrature(params: ModelParams, z: complex, grid: RadialGrid | None = None) -> float:
    """<psi_z|h0 - alpha|psi_z>; equals N1z^-2 by the factorization h0 - alpha = L+ L."""
    z = require_disk(z)
    grid = coherent_grid(params, z) if grid is None else grid
    x = grid.nodes
    beta = (1 - z) / (1 + z)
    density = np.abs(coherent_psi(params, z, x)) ** 2
    ratio = 2 * params.k * beta + (1 - beta**2) * x**2 / 4 - params.alpha
    return float(grid.integrate(density * ratio).real)


def coherent_energy_transformed(ctx: DarbouxContext, z: complex, grid: RadialGrid | None = None) -> float:
    """<phi_z|h1|phi_z> = alpha + ||L+ phi_z||^2.

    L+ phi_z = N1z (h0 - alpha) psi_z, and (h0 psi_z)/psi_z is known in
    closed form, so no derivative is taken numerically.
    """
    z = require_disk(z)
    params = ctx.params
    grid = coherent_grid(params, z) if grid is None else grid
    x = grid.nodes
    beta = (1 - z) / (1 + z)
    ratio = 2 * params.k * beta + (1 - beta**2) * x**2 / 4 - params.alpha
    back = N1z(params, abs(z) ** 2) * coherent_psi(params, z, x) * ratio
    return params.alpha + float(grid.integrate(np.abs(back) ** 2).real)
