"""
Berezin symbols <z*|A|z*> of the ladder operators of both systems, and
the Poisson bracket they are compared under.

Initial:      K0 = k(1+s)/(1-s),  K+ = 2k z/(1-s),  K- = conj(K+)
Transformed:  H1 = 2k + 4k s (c+1-p s) / ((1-s)(c-p s)),  P0 = H1/2
              P+ = 4k z/(c-p s) [(2k+1)(2k+2)/(1-s)^2 + 2(p-1)(2k+1)/(1-s) + p(p-1)]
              P- = conj(P+)
"""

import math
from typing import Callable, Dict

import numpy as np

from src.core.errors import DomainError, UsageError
from src.core.models import ModelParams, Observable, System
from src.services.darboux import raising_element
from src.services.geometry.kahler import metric
from src.services.numerics import power_series, wirtinger
from src.services.oscillator import coherent_coeff, energy, ladder_initial
from src.services.transformed_coherent import normalization_squared, transformed_coeff

SYMBOLS = ("K0", "K+", "K-", "H1", "P0", "P+", "P-")


def _disk(z: complex) -> complex:
    z = complex(z)
    if not abs(z) < 1.0:
        raise DomainError(f"symbols are defined for |z| < 1, got {z}")
    return z


def _p_plus(params: ModelParams, z: complex) -> complex:
    k, p, c = params.k, params.p, params.c
    s = abs(z) ** 2
    bracket = ((2 * k + 1) * (2 * k + 2) / (1 - s) ** 2
               + 2 * (p - 1) * (2 * k + 1) / (1 - s) + p * (p - 1))
    return 4 * k * z / (c - p * s) * bracket


def _h1(params: ModelParams, s):
    k, p, c = params.k, params.p, params.c
    return 2 * k + 4 * k * s * (c + 1 - p * s) / ((1 - s) * (c - p * s))


# Radial symbols as functions of s; stencils near s = 0 sample s < 0.
RADIAL: Dict[str, Callable[[ModelParams, np.ndarray], np.ndarray]] = {
    "K0": lambda q, s: q.k * (1 + s) / (1 - s),
    "H1": _h1,
    "P0": lambda q, s: 0.5 * _h1(q, s),
}


_CLOSED: Dict[str, Callable[[ModelParams, complex], complex]] = {
    "K0": lambda q, z: RADIAL["K0"](q, abs(z) ** 2),
    "K+": lambda q, z: 2 * q.k * z / (1 - abs(z) ** 2),
    "K-": lambda q, z: 2 * q.k * z.conjugate() / (1 - abs(z) ** 2),
    "H1": lambda q, z: RADIAL["H1"](q, abs(z) ** 2),
    "P0": lambda q, z: RADIAL["P0"](q, abs(z) ** 2),
    "P+": _p_plus,
    "P-": lambda q, z: _p_plus(q, z).conjugate(),
}


def symbol(params: ModelParams, which: str, z: complex) -> complex:
    if which not in _CLOSED:
        raise UsageError(f"unknown symbol {which!r}; expected one of {SYMBOLS}")
    return complex(_CLOSED[which](params, _disk(z)))


def symbol_series(params: ModelParams, which: str, z: complex, tol: float | None = None) -> complex:
    """The same symbol rebuilt from matrix elements and coherent-state coefficients.

    Every coefficient below is positive, so the series runs through the
    log-space power-series helper.
    """
    z = _disk(z)
    s = abs(z) ** 2
    k = params.k
    n0_sq = (1 - s) ** (2 * k)
    a, b = coherent_coeff, transformed_coeff
    terms: Dict[str, Callable[[int], float]] = {
        "K0": lambda n: a(params, n) ** 2 * ladder_initial(params, n)[2],
        "K+": lambda n: a(params, n + 1) * a(params, n) * ladder_initial(params, n)[0],
        "H1": lambda n: b(params, n) ** 2 * energy(params, n),
        "P+": lambda n: b(params, n + 1) * b(params, n) * raising_element(params, n),
    }
    base = {"K-": "K+", "P-": "P+", "P0": "H1"}.get(which, which)
    if base not in terms:
        raise UsageError(f"unknown symbol {which!r}; expected one of {SYMBOLS}")
    total, _ = power_series(lambda n: math.log(terms[base](n)), s, tol)
    weight = n0_sq if base in ("K0", "K+") else normalization_squared(params, s)
    value = weight * total
    if base in ("K+", "P+"):
        value *= z
    if which in ("K-", "P-"):
        value = value.conjugate()
    if which == "P0":
        value *= 0.5
    return complex(value)


def symbol_observable(params: ModelParams, which: str) -> Observable:
    """Closed-form symbol with Wirtinger derivatives by stencil."""
    def value(z: complex) -> complex:
        return symbol(params, which, z)

    return Observable(
        value=value,
        dz=lambda z: wirtinger(value, z)[0],
        dzbar=lambda z: wirtinger(value, z)[1],
        name=which,
    )


def coordinate(conjugate: bool = False) -> Observable:
    if conjugate:
        return Observable(lambda z: complex(z).conjugate(), lambda z: 0.0, lambda z: 1.0, "zbar")
    return Observable(lambda z: complex(z), lambda z: 1.0, lambda z: 0.0, "z")


def polynomial_observable(terms: Dict[tuple[int, int], complex], name: str = "poly") -> Observable:
    """sum c_ij z^i conj(z)^j with exact Wirtinger derivatives."""
    def value(z):
        return sum(c * z**i * np.conj(z) ** j for (i, j), c in terms.items())

    def dz(z):
        return sum(c * i * z ** (i - 1) * np.conj(z) ** j for (i, j), c in terms.items() if i)

    def dzbar(z):
        return sum(c * j * z**i * np.conj(z) ** (j - 1) for (i, j), c in terms.items() if j)

    return Observable(value, dz, dzbar, name)


def product(first: Observable, second: Observable) -> Observable:
    return Observable(
        value=lambda z: first.value(z) * second.value(z),
        dz=lambda z: first.dz(z) * second.value(z) + first.value(z) * second.dz(z),
        dzbar=lambda z: first.dzbar(z) * second.value(z) + first.value(z) * second.dzbar(z),
        name=f"{first.name}*{second.name}",
    )


def poisson(params: ModelParams, system: System, F: Observable, G: Observable, z: complex) -> complex:
    """{F, G} = (i/g)(dF/dz* dG/dz - dF/dz dG/dz*), so that {z, K0} = -i z."""
    z = _disk(z)
    g = float(metric(params, system, abs(z) ** 2))
    return complex(1j / g * (F.dzbar(z) * G.dz(z) - F.dz(z) * G.dzbar(z)))


def sample_points(count: int, seed: int, r_max: float = 0.9) -> np.ndarray:
    """Deterministic pseudo-random points with |z| <= r_max, uniform in area."""
    rng = np.random.default_rng(seed)
    r = r_max * np.sqrt(rng.uniform(0.0, 1.0, count))
    theta = rng.uniform(0.0, 2.0 * np.pi, count)
    return r * np.exp(1j * theta)
