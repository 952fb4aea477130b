"""
Eigenfunctions psi_n(x) of the singular oscillator and h0 on a grid.

    psi_n(x) = [n! 2^(1-2k) / Gamma(n+2k)]^(1/2) x^(2k-1/2) e^(-x^2/4) L_n^(2k-1)(x^2/2)

Derivatives come from d/dy L_n^a = -L_{n-1}^(a+1) and
d^2/dy^2 L_n^a = L_{n-2}^(a+2); finite differences only appear in
`apply_h0`, which exists to check the eigen-relation.
"""

import numpy as np

from src.core.errors import DomainError, UsageError
from src.core.models import ModelParams, RadialGrid, StateVector
from src.services.numerics import d2_uniform, stencil_grid, window_max
from src.services.oscillator.spectrum import energy
from src.services.specfun import laguerre, laguerre_columns, log_gamma


def require_positive(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("wavefunctions are defined for x > 0 only")
    return x


def log_norm(params: ModelParams, n: int) -> float:
    k = params.k
    return 0.5 * (log_gamma(n + 1) + (1 - 2 * k) * np.log(2.0) - log_gamma(n + 2 * k))


def _envelope(params: ModelParams, n: int, x: np.ndarray) -> np.ndarray:
    # normalisation * x^(2k-1/2) e^(-x^2/4), assembled in log-space
    return np.exp(log_norm(params, n) + (2 * params.k - 0.5) * np.log(x) - x**2 / 4)


def psi(params: ModelParams, n: int, x):
    x = require_positive(x)
    a = 2 * params.k - 1
    return _envelope(params, n, x) * laguerre(n, a, x**2 / 2)


def psi_table(params: ModelParams, n_max: int, x) -> np.ndarray:
    """Rows psi_0 .. psi_{n_max} on x; one Laguerre recurrence for all rows."""
    x = require_positive(x)
    a = 2 * params.k - 1
    table = laguerre_columns(n_max, a, x**2 / 2)
    for n in range(n_max + 1):
        table[n] *= _envelope(params, n, x)
    return table


def psi_prime(params: ModelParams, n: int, x):
    x = require_positive(x)
    a = 2 * params.k - 1
    y = x**2 / 2
    log_d = (2 * params.k - 0.5) / x - x / 2
    return _envelope(params, n, x) * (log_d * laguerre(n, a, y) - x * laguerre(n - 1, a + 1, y))


def psi_second(params: ModelParams, n: int, x):
    x = require_positive(x)
    k = params.k
    a = 2 * k - 1
    y = x**2 / 2
    sp = 2 * k - 0.5
    log_d = sp / x - x / 2
    # envelope g: g'/g = log_d, g''/g = log_d^2 - sp/x^2 - 1/2
    g2 = log_d**2 - sp / x**2 - 0.5
    m0 = laguerre(n, a, y)
    m1 = -x * laguerre(n - 1, a + 1, y)
    m2 = -laguerre(n - 1, a + 1, y) + x**2 * laguerre(n - 2, a + 2, y)
    return _envelope(params, n, x) * (g2 * m0 + 2 * log_d * m1 + m2)


def potential(params: ModelParams, x):
    x = require_positive(x)
    return x**2 / 4 + params.b / x**2


def eigen_state(params: ModelParams, n: int, grid: RadialGrid) -> StateVector:
    return StateVector(grid, psi(params, n, grid.nodes), psi_prime(params, n, grid.nodes))


def apply_h0(params: ModelParams, state: StateVector) -> StateVector:
    """h0 on a UNIFORM grid: 5-point stencil for -d^2/dx^2, potential pointwise."""
    if state.grid.size < 5:
        raise UsageError(f"apply_h0 needs at least 5 grid nodes, got {state.grid.size}")
    x = state.grid.nodes
    values = -d2_uniform(state.values, state.grid.spacing) + potential(params, x) * state.values
    return StateVector(state.grid, values)


def eigen_residual(params: ModelParams, n: int, grid: RadialGrid | None = None) -> float:
    """max |h0 psi_n - E_n psi_n| over the residual window."""
    grid = stencil_grid() if grid is None else grid
    state = eigen_state(params, n, grid)
    residual = apply_h0(params, state).values - energy(params, n) * state.values
    return window_max(grid.nodes, residual)
