"""
L = -L0 + d/dx, its adjoint L+ = -L0 - d/dx, and the transformed states.

All operator applications use analytic derivatives; stencils appear only
in the residual checks at the bottom of this module.
"""

import numpy as np

from src.core.errors import UsageError
from src.core.models import DarbouxContext, RadialGrid, StateVector
from src.services.darboux.transform import A_p, L0, L0_prime, V_p, log_u_p, u_p
from src.services.numerics import d1_uniform, d2_uniform, reference_grid, window_max
from src.services.oscillator import apply_h0, energy, psi, psi_prime, psi_second


def apply_L(ctx: DarbouxContext, x, f, f_prime):
    """-L0 f + f' pointwise."""
    return -L0(ctx, x) * f + f_prime


def apply_L_dag(ctx: DarbouxContext, x, f, f_prime):
    """-L0 f - f' pointwise."""
    return -L0(ctx, x) * f - f_prime


def L_psi_prime(ctx: DarbouxContext, n: int, x):
    """d/dx (L psi_n) = -L0' psi - L0 psi' + psi''."""
    params = ctx.params
    return (-L0_prime(ctx, x) * psi(params, n, x) - L0(ctx, x) * psi_prime(params, n, x)
            + psi_second(params, n, x))


def phi(ctx: DarbouxContext, n: int, x):
    """phi_n = N_n L psi_n."""
    params = ctx.params
    return ctx.norm_factor(n) * apply_L(ctx, x, psi(params, n, x), psi_prime(params, n, x))


def phi_prime(ctx: DarbouxContext, n: int, x):
    return ctx.norm_factor(n) * L_psi_prime(ctx, n, x)


def phi_state(ctx: DarbouxContext, n: int) -> StateVector:
    x = ctx.grid.nodes
    return StateVector(ctx.grid, phi(ctx, n, x), phi_prime(ctx, n, x))


def apply_h1(ctx: DarbouxContext, state: StateVector) -> StateVector:
    """h1 = -d^2/dx^2 + V_p on a UNIFORM grid, stencil second derivative."""
    x = state.grid.nodes
    values = -d2_uniform(state.values, state.grid.spacing) + V_p(ctx, x) * state.values
    return StateVector(state.grid, values)


def transformed_eigen_residual(ctx: DarbouxContext, n: int) -> float:
    """max |h1 phi_n - E_n phi_n| with the initial-system E_n."""
    state = phi_state(ctx, n)
    residual = apply_h1(ctx, state).values - energy(ctx.params, n) * state.values
    return window_max(ctx.grid.nodes, residual)


def factorization_residual_initial(ctx: DarbouxContext, n: int) -> float:
    """max |L+ L psi_n - (E_n - alpha) psi_n|, fully analytic."""
    x = ctx.grid.nodes
    params = ctx.params
    L_psi = apply_L(ctx, x, psi(params, n, x), psi_prime(params, n, x))
    lhs = apply_L_dag(ctx, x, L_psi, L_psi_prime(ctx, n, x))
    rhs = (energy(params, n) - params.alpha) * psi(params, n, x)
    return window_max(x, lhs - rhs)


def factorization_residual_transformed(ctx: DarbouxContext, n: int) -> float:
    """max |L L+ phi_n - (E_n - alpha) phi_n|; the outer derivative is a stencil."""
    x = ctx.grid.nodes
    params = ctx.params
    Ldag_phi = apply_L_dag(ctx, x, phi(ctx, n, x), phi_prime(ctx, n, x))
    lhs = apply_L(ctx, x, Ldag_phi, d1_uniform(Ldag_phi, ctx.grid.spacing))
    rhs = (energy(params, n) - params.alpha) * phi(ctx, n, x)
    return window_max(x, lhs - rhs)


def inverse_residual(ctx: DarbouxContext, n: int) -> float:
    """max |psi_n - N_n L+ phi_n|: L+ maps the transformed states back."""
    x = ctx.grid.nodes
    back = ctx.norm_factor(n) * apply_L_dag(ctx, x, phi(ctx, n, x), phi_prime(ctx, n, x))
    return window_max(x, back - psi(ctx.params, n, x))


def intertwining_residual(ctx: DarbouxContext, state: StateVector) -> float:
    """max |(L h0 - h1 L) state| / max(1, max |state|) on a UNIFORM grid.

    `state.derivative` must hold the analytic x-derivative.
    """
    if state.derivative is None:
        raise UsageError("intertwining_residual needs the analytic derivative of the state")
    grid = state.grid
    x = grid.nodes
    h = grid.spacing
    h0_state = apply_h0(ctx.params, state).values
    left = apply_L(ctx, x, h0_state, d1_uniform(h0_state, h))
    L_state = StateVector(grid, apply_L(ctx, x, state.values, state.derivative))
    right = apply_h1(ctx, L_state).values
    scale = max(1.0, float(np.max(np.abs(state.values))))
    return window_max(x, left - right) / scale


def transform_residual(ctx: DarbouxContext) -> float:
    """max |h0 u_p - alpha u_p| / |u_p| over interior nodes of the residual window.

    u_p grows like e^(x^2/4), so the relative stencil error grows like
    (x/2)^6 h^4; keep the context grid short (x_max ~ 6) for this check.
    """
    x = ctx.grid.nodes
    values = u_p(ctx, x)
    residual = apply_h0(ctx.params, StateVector(ctx.grid, values)).values - ctx.params.alpha * values
    return window_max(x[2:-2], residual[2:-2] / values[2:-2])


def phi_gram(ctx: DarbouxContext, n_max: int, grid: RadialGrid | None = None) -> np.ndarray:
    """<phi_m|phi_n> for m, n <= n_max on a GAUSS grid."""
    grid = reference_grid(ctx.params, n_max) if grid is None else grid
    table = np.array([phi(ctx, n, grid.nodes) for n in range(n_max + 1)])
    return (table * grid.weights) @ table.T


def normalization_by_quadrature(ctx: DarbouxContext, n: int, grid: RadialGrid | None = None) -> float:
    """<phi_n|h1 - alpha|phi_n> = ||L+ phi_n||^2, expected N_n^-2."""
    grid = reference_grid(ctx.params, n) if grid is None else grid
    x = grid.nodes
    back = apply_L_dag(ctx, x, phi(ctx, n, x), phi_prime(ctx, n, x))
    return float(grid.integrate(back**2))


def potential_difference_residual(ctx: DarbouxContext) -> float:
    """max |A_p + 2 (ln u_p)''| with the second derivative by stencil."""
    x = ctx.grid.nodes
    log_u = log_u_p(ctx, x)
    residual = A_p(ctx, x) + 2 * d2_uniform(log_u, ctx.grid.spacing)
    return window_max(x[2:-2], residual[2:-2])


def log_derivative_residual(ctx: DarbouxContext) -> float:
    """max |L0 - d/dx ln u_p| with the derivative by stencil; pins the sign of L0."""
    x = ctx.grid.nodes
    residual = L0(ctx, x) - d1_uniform(log_u_p(ctx, x), ctx.grid.spacing)
    return window_max(x[2:-2], residual[2:-2])
