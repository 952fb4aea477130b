"""
The transformation function u_p and the quantities built from it.

    u_p(x) = x^(2k-1/2) L_p^(2k-1)(y) e^(x^2/4),  y = -x^2/2
    L0     = u_p'/u_p
    A_p    = -2 (ln u_p)'' = -2 L0'
    V_p    = x^2/4 + b/x^2 + A_p

L_p^(2k-1) has only positive coefficients in -y, so u_p is nodeless on
x > 0. L0 is u'/u; the frequently quoted closed form
(1-4k)/(2x) - x/2 - x L_{p-1}/L_p is its negative.
"""

import numpy as np

from src.core.errors import DomainError, NumericOverflowError
from src.core.models import DarbouxContext, ModelParams, RadialGrid
from src.infrastructure.logging import get_logger
from src.services.numerics import stencil_grid
from src.services.oscillator import require_positive
from src.services.specfun import laguerre_columns

logger = get_logger(__name__)


def _triplet(params: ModelParams, x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # L_p^a, L_{p-1}^(a+1), L_{p-2}^(a+2) at y = -x^2/2, a = 2k-1
    a = 2 * params.k - 1
    p = params.p
    y = -(x**2) / 2

    def row(shift: int) -> np.ndarray:
        if p - shift < 0:
            return np.zeros_like(x)
        return laguerre_columns(p - shift, a + shift, y)[p - shift]

    return row(0), row(1), row(2)


def make_context(params: ModelParams, grid: RadialGrid | None = None) -> DarbouxContext:
    """Precompute the Laguerre values of u_p on `grid` and check u_p is nodeless there."""
    grid = stencil_grid() if grid is None else grid
    lag_p, lag_p1, lag_p2 = _triplet(params, grid.nodes)
    if np.any(lag_p <= 0):
        raise DomainError(f"u_p has a node on the grid (p={params.p}, k={params.k})")
    logger.debug("Darboux context built", p=params.p, k=params.k, nodes=grid.size)
    return DarbouxContext(params=params, grid=grid, lag_p=lag_p, lag_p1=lag_p1, lag_p2=lag_p2)


def _laguerre(ctx: DarbouxContext, x) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    if x is ctx.grid.nodes:
        return x, ctx.lag_p, ctx.lag_p1, ctx.lag_p2
    x = require_positive(x)
    lag_p, lag_p1, lag_p2 = _triplet(ctx.params, x)
    if np.any(lag_p <= 0):
        raise DomainError("u_p vanishes at a requested point")
    return (x, lag_p, lag_p1, lag_p2)


def log_u_p(ctx: DarbouxContext, x):
    x, lag_p, _, _ = _laguerre(ctx, x)
    return (2 * ctx.params.k - 0.5) * np.log(x) + np.log(lag_p) + x**2 / 4


def u_p(ctx: DarbouxContext, x):
    with np.errstate(over="ignore"):
        values = np.exp(log_u_p(ctx, x))
    if not np.all(np.isfinite(values)):
        raise NumericOverflowError("u_p overflowed; use log_u_p for large x")
    return values


def L0(ctx: DarbouxContext, x):
    """u_p'/u_p = (2k-1/2)/x + x/2 + x L_{p-1}^(2k)(y) / L_p^(2k-1)(y)."""
    x, lag_p, lag_p1, _ = _laguerre(ctx, x)
    return (2 * ctx.params.k - 0.5) / x + x / 2 + x * lag_p1 / lag_p


def L0_closed_form(ctx: DarbouxContext, x):
    """The Laguerre closed form (1-4k)/(2x) - x/2 - x L_{p-1}/L_p, equal to -L0."""
    x, lag_p, lag_p1, _ = _laguerre(ctx, x)
    return (1 - 4 * ctx.params.k) / (2 * x) - x / 2 - x * lag_p1 / lag_p


def L0_prime(ctx: DarbouxContext, x):
    x, lag_p, lag_p1, lag_p2 = _laguerre(ctx, x)
    ratio = lag_p1 / lag_p
    # d/dx L_m^a(-x^2/2) = x L_{m-1}^(a+1)(-x^2/2)
    return (-(2 * ctx.params.k - 0.5) / x**2 + 0.5 + ratio
            + x**2 * (lag_p2 / lag_p - ratio**2))


def A_p_regular(ctx: DarbouxContext, x):
    """A_p - (4k-1)/x^2, evaluated without the cancellation near the origin."""
    x, lag_p, lag_p1, lag_p2 = _laguerre(ctx, x)
    ratio = lag_p1 / lag_p
    return -1.0 - 2 * ratio - 2 * x**2 * lag_p2 / lag_p + 2 * x**2 * ratio**2


def A_p(ctx: DarbouxContext, x):
    """Potential difference V_p - V_0 = -2 (ln u_p)''.

    p = 0 gives -1 + (4k-1)/x^2; negative-index Laguerre terms are zero.
    """
    x = require_positive(x) if x is not ctx.grid.nodes else x
    return (4 * ctx.params.k - 1) / x**2 + A_p_regular(ctx, x)


def V_p(ctx: DarbouxContext, x):
    x = require_positive(x) if x is not ctx.grid.nodes else x
    return x**2 / 4 + ctx.params.b / x**2 + A_p(ctx, x)


def small_x_limit(ctx: DarbouxContext, x: float = 1e-4) -> tuple[float, float]:
    """(A_p(x) - (4k-1)/x^2 at small x, its limit -1 - p/k)."""
    measured = float(A_p_regular(ctx, np.asarray([x]))[0])
    return measured, -1.0 - ctx.params.p / ctx.params.k
