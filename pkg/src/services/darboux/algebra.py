"""
Matrix elements of p0, p+ and p- = L k+- L+ on the transformed basis.

    p+ |phi_n>  = c+(n) |phi_{n+1}>,  c+(n) = -sqrt((E_n - a)(E_{n+1} - a)(n+1)(n+2k))
    p- |phi_n>  = c-(n) |phi_{n-1}>,  c-(n) = c+(n-1)
    p0 |phi_n>  = (k+n) |phi_n>

The commutator [p-, p+] is diagonal with a cubic in p0 as eigenvalue.
"""

import math

from src.core.errors import DomainError
from src.core.models import DarbouxContext, ModelParams
from src.services.oscillator import energy


def _shifted_energy(params: ModelParams, n: int) -> float:
    return energy(params, n) - params.alpha


def raising_element(params: ModelParams, n: int) -> float:
    if n < 0:
        return 0.0
    k = params.k
    return -math.sqrt(_shifted_energy(params, n) * _shifted_energy(params, n + 1) * (n + 1) * (n + 2 * k))


def ladder_matrix_elements(ctx: DarbouxContext, n: int) -> tuple[float, float]:
    """(p+ coefficient at n, p- coefficient at n); the latter is 0 at n = 0."""
    if n < 0:
        raise DomainError(f"level must be >= 0, got n={n}")
    return raising_element(ctx.params, n), raising_element(ctx.params, n - 1)


def commutator_polynomial(params: ModelParams, p0: float) -> float:
    """2 (2k(1-k) - p0 alpha + 4 p0^2)(2 p0 - alpha)."""
    k, alpha = params.k, params.alpha
    return 2.0 * (2 * k * (1 - k) - p0 * alpha + 4 * p0**2) * (2 * p0 - alpha)


def nonlinear_commutator_check(ctx: DarbouxContext, n: int) -> tuple[float, float]:
    """(<phi_n|[p-,p+]|phi_n> from matrix elements, the cubic at p0 = k+n)."""
    if n < 0:
        raise DomainError(f"level must be >= 0, got n={n}")
    params = ctx.params
    k = params.k
    lhs = _shifted_energy(params, n) * (
        _shifted_energy(params, n + 1) * (n + 1) * (n + 2 * k)
        - (_shifted_energy(params, n - 1) * n * (n + 2 * k - 1) if n > 0 else 0.0)
    )
    return lhs, commutator_polynomial(params, k + n)
