"""
Kähler potentials, metrics and Gauss curvature of the two phase spaces.

    f0 = -2k ln(1-s)                          g0 = 2k / (1-s)^2
    f1 = -(2k+1) ln(1-s) + ln((c - p s)/c)    g1 = (2k+1)/(1-s)^2 - p c/(c - p s)^2

with s = |z|^2, g = F' + s F'' for a radial potential F(s), and
K = -(2/g) (G' + s G''), G = ln g.
"""

import numpy as np

from src.core.errors import DomainError
from src.core.models import KahlerStructure, ModelParams, System
from src.services.numerics import radial_derivatives


def _check_s(s) -> np.ndarray:
    s = np.asarray(s, dtype=float)
    if np.any(s < 0) or np.any(s >= 1):
        raise DomainError("s = |z|^2 must lie in [0, 1)")
    return s


# Unchecked forms: stencils around s = 0 sample slightly negative s.
def _f0(params: ModelParams, s):
    return -2 * params.k * np.log1p(-s)


def _f1(params: ModelParams, s):
    c, p = params.c, params.p
    return -(2 * params.k + 1) * np.log1p(-s) + np.log((c - p * s) / c)


def _g0(params: ModelParams, s):
    return 2 * params.k / (1 - s) ** 2


def _g1(params: ModelParams, s):
    c, p = params.c, params.p
    return (2 * params.k + 1) / (1 - s) ** 2 - p * c / (c - p * s) ** 2


def f0(params: ModelParams, s):
    return _f0(params, _check_s(s))


def f1(params: ModelParams, s):
    """f0 + ln(<psi_z|h0 - alpha|psi_z> / (E0 - alpha)) in closed form."""
    return _f1(params, _check_s(s))


def g0(params: ModelParams, s):
    return _g0(params, _check_s(s))


def g1(params: ModelParams, s):
    return _g1(params, _check_s(s))


def kahler_structure(params: ModelParams, system: System) -> KahlerStructure:
    if system is System.INITIAL:
        return KahlerStructure(system, params, lambda s: _f0(params, s), lambda s: _g0(params, s))
    return KahlerStructure(system, params, lambda s: _f1(params, s), lambda s: _g1(params, s))


def metric(params: ModelParams, system: System, s):
    return kahler_structure(params, system).metric(_check_s(s))


def metric_from_potential(params: ModelParams, system: System, s: float) -> tuple[float, float]:
    """(F' + s F'' by stencil, closed-form g) at one s."""
    s = float(_check_s(s))
    structure = kahler_structure(params, system)
    d1, d2 = radial_derivatives(structure.potential, s)
    return d1 + s * d2, float(structure.metric(s))


def curvature(params: ModelParams, system: System, z: complex) -> float:
    """-(2/g)(G' + s G''), G = ln g, derivatives by 5-point stencil in s."""
    z = complex(z)
    if not abs(z) < 1.0:
        raise DomainError(f"curvature needs |z| < 1, got {z}")
    s = abs(z) ** 2
    structure = kahler_structure(params, system)
    d1, d2 = radial_derivatives(lambda t: np.log(structure.metric(t)), s)
    return float(-2.0 / structure.metric(s) * (d1 + s * d2))
