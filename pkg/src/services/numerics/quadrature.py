"""
Quadrature on the half-line and on the unit disk.

Every integral is self-convergence checked: the rule is doubled until two
consecutive values agree to the requested tolerance, and both values are
handed back so callers can report the residual.
"""

import math
from typing import Callable

import numpy as np
from scipy import special

from src.config.settings import QuadratureSettings, settings
from src.core.errors import ConvergenceError, UsageError
from src.core.models import (
    DiskQuadrature,
    GridKind,
    ModelParams,
    QuadratureResult,
    QuadratureSpec,
    RadialGrid,
    Scheme,
)
from src.infrastructure.logging import get_logger

logger = get_logger(__name__)


def legendre_panels(a: float, b: float, panels: int, nodes: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre rule on [a, b] with `panels` equal panels."""
    if panels < 1 or nodes < 1:
        raise UsageError(f"need at least one panel and one node, got {panels}x{nodes}")
    t, w = np.polynomial.legendre.leggauss(nodes)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    x = (mid[:, None] + half[:, None] * t[None, :]).ravel()
    wx = (half[:, None] * w[None, :]).ravel()
    return x, wx


def reference_x_max(params: ModelParams, n_max: int, margin: float | None = None) -> float:
    """Cutoff 2 sqrt(2 E_N) + margin; every state up to level N is negligible past it."""
    margin = settings.grid.tail_margin if margin is None else margin
    e_n = 2.0 * n_max + 2.0 * params.k
    return 2.0 * math.sqrt(2.0 * e_n) + margin


def reference_grid(params: ModelParams, n_max: int, total_nodes: int | None = None,
                   panels: int | None = None) -> RadialGrid:
    """GAUSS grid used for every half-line inner product."""
    total_nodes = settings.grid.gauss_nodes if total_nodes is None else total_nodes
    panels = settings.grid.panels if panels is None else panels
    per_panel = max(total_nodes // panels, 2)
    x, w = legendre_panels(0.0, reference_x_max(params, n_max), panels, per_panel)
    return RadialGrid(nodes=x, weights=w, kind=GridKind.GAUSS)


def uniform_grid(x_min: float, x_max: float, n: int | None = None) -> RadialGrid:
    """UNIFORM grid on [x_min, x_max] with trapezoid weights, for stencils."""
    n = settings.grid.stencil_nodes if n is None else n
    if n < 5:
        raise UsageError(f"uniform grids need at least 5 nodes, got {n}")
    if not 0.0 < x_min < x_max:
        raise UsageError(f"need 0 < x_min < x_max, got [{x_min}, {x_max}]")
    x = np.linspace(x_min, x_max, n)
    h = x[1] - x[0]
    w = np.full(n, h)
    w[0] = w[-1] = 0.5 * h
    return RadialGrid(nodes=x, weights=w, kind=GridKind.UNIFORM)


def halfline_integrate(f: Callable[[np.ndarray], np.ndarray], spec: QuadratureSpec) -> QuadratureResult:
    """Integral of f over (0, x_max], doubling the panel count until converged."""
    if spec.scheme is not Scheme.HALFLINE:
        raise UsageError(f"halfline_integrate needs a HALFLINE spec, got {spec.scheme.value}")

    def once(s: QuadratureSpec) -> complex:
        x, w = legendre_panels(0.0, s.x_max, s.panels, s.nodes)
        return np.sum(w * f(x))

    return _converge(once, spec, lambda s: s.panels * s.nodes)


def jacobi_rule(n: int, rim_exponent: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes s_i in (0,1) and weights for integrals of g(s) (1-s)^gamma over [0,1].

    The returned weights already carry 2^(-gamma-1); the rim power itself
    is in the weight function, so callers pass the smooth factor only.
    """
    if rim_exponent <= -1.0:
        raise UsageError(f"rim exponent must exceed -1, got {rim_exponent}")
    x, w = special.roots_jacobi(n, rim_exponent, 0.0)
    return 0.5 * (1.0 + x), w * 2.0 ** (-rim_exponent - 1.0)


def _radial_rule(spec: QuadratureSpec, rim_exponent: float) -> tuple[np.ndarray, np.ndarray]:
    # weights for a plain integral over s; for JACOBI the rim power is divided out
    if spec.scheme is Scheme.JACOBI:
        s, w = jacobi_rule(spec.nodes, rim_exponent)
        return s, w / (1.0 - s) ** rim_exponent
    if spec.scheme is Scheme.LEGENDRE:
        return legendre_panels(0.0, spec.s_max, 1, spec.nodes)
    raise UsageError(f"{spec.scheme.value} is not a radial scheme")


def radial_spec(tolerance: float, scheme: Scheme = Scheme.JACOBI,
                quadrature: QuadratureSettings | None = None) -> QuadratureSpec:
    cfg = settings.quadrature if quadrature is None else quadrature
    return QuadratureSpec(scheme=scheme, nodes=cfg.radial_nodes, s_max=cfg.s_max,
                          tolerance=tolerance, max_doublings=cfg.max_doublings)


def radial_integrate(g: Callable[[np.ndarray], np.ndarray], rim_exponent: float,
                     spec: QuadratureSpec) -> QuadratureResult:
    """Integral of g over s in [0, 1), where g(s) ~ (1-s)^rim_exponent at the rim."""

    def once(s: QuadratureSpec) -> complex:
        nodes, w = _radial_rule(s, rim_exponent)
        return np.sum(w * g(nodes))

    return _converge(once, spec, lambda s: s.nodes)


def disk_rule(spec: QuadratureSpec, rim_exponent: float, angular_nodes: int | None = None) -> DiskQuadrature:
    angular_nodes = settings.quadrature.angular_nodes if angular_nodes is None else angular_nodes
    if angular_nodes < 64:
        raise UsageError(f"angular rule needs at least 64 points, got {angular_nodes}")
    s, ws = _radial_rule(spec, rim_exponent)
    theta = 2.0 * np.pi * np.arange(angular_nodes) / angular_nodes
    return DiskQuadrature(s=s, ws=ws, theta=theta, wtheta=2.0 * np.pi / angular_nodes)


def disk_integrate(f: Callable[[np.ndarray], np.ndarray], rim_exponent: float,
                   spec: QuadratureSpec, angular_nodes: int | None = None) -> QuadratureResult:
    """Integral of f(z) over the unit disk against the area element dA = d^2z.

    f is evaluated on a complex array; its rim behaviour must be
    (1-|z|^2)^rim_exponent times a smooth function.
    """
    def once(s: QuadratureSpec) -> complex:
        rule = disk_rule(s, rim_exponent, angular_nodes)
        z = np.sqrt(rule.s)[:, None] * np.exp(1j * rule.theta)[None, :]
        # dA = (1/2) ds dtheta
        return 0.5 * rule.wtheta * np.sum(rule.ws[:, None] * f(z))

    return _converge(once, spec, lambda s: s.nodes)


def disk_monomial_integral(n: int, m: int, radial_weight: Callable[[np.ndarray], np.ndarray],
                           rim_exponent: float, spec: QuadratureSpec) -> QuadratureResult:
    """Integral of conj(z)^m z^n w(|z|^2) dA with the angle done analytically.

    Off-diagonal pairings vanish exactly; the diagonal reduces to
    pi * int_0^1 s^n w(s) ds.
    """
    if n != m:
        return QuadratureResult(value=0.0, previous=0.0, nodes=0)
    res = radial_integrate(lambda s: s**n * radial_weight(s), rim_exponent, spec)
    return QuadratureResult(value=np.pi * res.value, previous=np.pi * res.previous, nodes=res.nodes)


def _converge(once: Callable[[QuadratureSpec], complex], spec: QuadratureSpec,
              count: Callable[[QuadratureSpec], int]) -> QuadratureResult:
    value = once(spec)
    previous = value
    current_spec = spec
    for _ in range(spec.max_doublings):
        previous, current_spec = value, current_spec.doubled()
        value = once(current_spec)
        if abs(value - previous) <= spec.tolerance * max(1.0, abs(value)):
            return QuadratureResult(value=complex(value), previous=complex(previous),
                                    nodes=count(current_spec))
    logger.warning("Quadrature did not converge", scheme=spec.scheme.value,
                   nodes=count(current_spec), residual=abs(value - previous))
    raise ConvergenceError(
        f"{spec.scheme.value} quadrature not converged after {spec.max_doublings} doublings",
        last=complex(value), previous=complex(previous),
    )


def stencil_grid(n: int | None = None, x_max: float | None = None) -> RadialGrid:
    """The default UNIFORM grid (0, x_max] used by every stencil residual."""
    n = settings.grid.stencil_nodes if n is None else n
    x_max = settings.grid.stencil_x_max if x_max is None else x_max
    return uniform_grid(x_max / n, x_max, n)
