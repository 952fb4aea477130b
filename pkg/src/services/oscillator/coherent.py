"""
Coherent states of the initial system and their measure on the unit disk.

psi_z = N0(z) sum_n a_n z^n psi_n with N0 = (1-|z|^2)^k sums to

    2^(1/2-k) Gamma(2k)^(-1/2) (1-|z|^2)^k (1+z)^(-2k) x^(2k-1/2)
        exp[-(1-z) x^2 / (4(1+z))]

The widely quoted form with (1-z)^(-2k) and exp[-(1+z)x^2/(4(1-z))] is
the same family at label -z; `coherent_psi_minus_label` keeps it for the
label-convention check.
"""

import math

import numpy as np

from src.config.settings import settings
from src.core.errors import DomainError
from src.core.models import GridKind, ModelParams, QuadratureResult, QuadratureSpec, RadialGrid
from src.infrastructure.logging import get_logger
from src.services.numerics import (
    disk_integrate,
    disk_monomial_integral,
    legendre_panels,
    radial_spec,
    reference_x_max,
    truncation_order,
)
from src.services.oscillator.eigen import require_positive, psi_table
from src.services.specfun import log_gamma

logger = get_logger(__name__)


def require_disk(z: complex) -> complex:
    z = complex(z)
    if not abs(z) < 1.0:
        raise DomainError(f"coherent-state label must satisfy |z| < 1, got {z}")
    return z


def log_coherent_coeff(params: ModelParams, n: int) -> float:
    """ln |a_n| = (1/2) ln[Gamma(2k+n) / (n! Gamma(2k))]."""
    if n < 0:
        raise DomainError(f"coefficient index must be >= 0, got n={n}")
    k = params.k
    return 0.5 * (log_gamma(2 * k + n) - log_gamma(n + 1) - log_gamma(2 * k))


def coherent_coeff(params: ModelParams, n: int) -> float:
    """a_n = (-1)^n sqrt(Gamma(2k+n)/(n! Gamma(2k))), sign applied last."""
    return (-1) ** n * math.exp(log_coherent_coeff(params, n))


def coherent_term_size(params: ModelParams, n: int, r: float) -> float:
    """|a_n| r^n, the size that decides where the series is cut."""
    if r == 0.0:
        return 1.0 if n == 0 else 0.0
    return math.exp(log_coherent_coeff(params, n) + n * math.log(r))


def _prefactor(params: ModelParams) -> float:
    k = params.k
    return math.exp((0.5 - k) * math.log(2.0) - 0.5 * log_gamma(2 * k))


def coherent_psi(params: ModelParams, z: complex, x):
    z = require_disk(z)
    x = require_positive(x)
    k = params.k
    s = abs(z) ** 2
    beta = (1 - z) / (1 + z)
    return (_prefactor(params) * (1 - s) ** k * (1 + z) ** (-2 * k)
            * x ** (2 * k - 0.5) * np.exp(-beta * x**2 / 4))


def coherent_psi_minus_label(params: ModelParams, z: complex, x):
    """The (1-z)^(-2k) form; equals coherent_psi at label -z."""
    z = require_disk(z)
    x = require_positive(x)
    k = params.k
    s = abs(z) ** 2
    return (_prefactor(params) * (1 - s) ** k * (1 - z) ** (-2 * k)
            * x ** (2 * k - 0.5) * np.exp(-(1 + z) * x**2 / (4 * (1 - z))))


def coherent_psi_series(params: ModelParams, z: complex, x, tol: float | None = None):
    """N0(z) sum a_n z^n psi_n(x), truncated adaptively on |a_n z^n|."""
    z = require_disk(z)
    x = require_positive(x)
    r = abs(z)
    n_terms = truncation_order(lambda n: coherent_term_size(params, n, r), tol)
    table = psi_table(params, n_terms - 1, np.atleast_1d(x))
    weights = np.array([coherent_coeff(params, n) * z**n for n in range(n_terms)])
    total = (1 - r**2) ** params.k * (weights @ table)
    return total if np.ndim(x) else total[0]


def coherent_grid(params: ModelParams, z: complex, n_max: int = 0,
                  total_nodes: int | None = None, panels: int | None = None) -> RadialGrid:
    """GAUSS grid wide enough for psi_z.

    |psi_z|^2 ~ x^(4k-1) exp(-Re(beta) x^2 / 2); the cutoff puts the tail
    far below double precision relative to the peak.
    """
    z = require_disk(z)
    total_nodes = settings.grid.gauss_nodes if total_nodes is None else total_nodes
    panels = settings.grid.panels if panels is None else panels
    beta = ((1 - z) / (1 + z)).real
    a = 2 * params.k - 0.5
    x_max = max(reference_x_max(params, n_max), math.sqrt(8.0 * (a + 50.0) / beta))
    x, w = legendre_panels(0.0, x_max, panels, max(total_nodes // panels, 2))
    return RadialGrid(nodes=x, weights=w, kind=GridKind.GAUSS)


def coherent_norm(params: ModelParams, z: complex, grid: RadialGrid | None = None) -> float:
    grid = coherent_grid(params, z) if grid is None else grid
    values = coherent_psi(params, z, grid.nodes)
    return float(np.real(grid.integrate(np.abs(values) ** 2)))


def coherent_energy(params: ModelParams, z: complex, grid: RadialGrid | None = None) -> complex:
    """<psi_z|h0|psi_z> with (h0 psi_z)/psi_z = 2k beta + (1 - beta^2) x^2/4 exactly."""
    z = require_disk(z)
    grid = coherent_grid(params, z) if grid is None else grid
    x = grid.nodes
    beta = (1 - z) / (1 + z)
    density = np.abs(coherent_psi(params, z, x)) ** 2
    return complex(grid.integrate(density * (2 * params.k * beta + (1 - beta**2) * x**2 / 4)))


def measure_mu_weight(params: ModelParams, s):
    """(2k-1)/pi (1-s)^-2, a density against the area element d(Re z) d(Im z)."""
    s_arr = np.asarray(s, dtype=float)
    if np.any(s_arr < 0) or np.any(s_arr >= 1):
        raise DomainError("measure weight needs 0 <= s < 1")
    return (2 * params.k - 1) / np.pi / (1 - s_arr) ** 2


def resolution_element(params: ModelParams, m: int, n: int,
                       spec: QuadratureSpec | None = None, full_disk: bool = False) -> QuadratureResult:
    """<m| int |z><z| dmu |n>.

    <m|z> = N0 a_m z^m, so the element is the disk integral of
    a_m a_n z^m conj(z)^n (1-s)^(2k) dmu; the rim behaves like (1-s)^(2k-2).
    With `full_disk` the angle is integrated by the trapezoid rule instead of
    analytically.
    """
    spec = radial_spec(settings.tolerances.inner_product) if spec is None else spec
    k = params.k
    am, an = coherent_coeff(params, m), coherent_coeff(params, n)
    rim = 2 * k - 2

    def radial_weight(s):
        return am * an * (1 - s) ** (2 * k) * measure_mu_weight(params, s)

    if full_disk:
        return disk_integrate(
            lambda z: z**m * np.conj(z) ** n * radial_weight(np.abs(z) ** 2), rim, spec)
    return disk_monomial_integral(m, n, radial_weight, rim, spec)


def resolution_matrix(params: ModelParams, n_max: int, spec: QuadratureSpec | None = None) -> np.ndarray:
    out = np.empty((n_max + 1, n_max + 1))
    for m in range(n_max + 1):
        for n in range(n_max + 1):
            out[m, n] = resolution_element(params, m, n, spec).value.real
    logger.debug("Resolution matrix built", n_max=n_max, k=params.k)
    return out


def area_convention(element_00: float) -> str:
    """`area` when the (0,0) element is ~1 under d(Re z)d(Im z), `double` when ~2."""
    return "double" if abs(element_00 - 2.0) < abs(element_00 - 1.0) else "area"


__all__ = [
    "area_convention",
    "require_disk",
    "coherent_coeff",
    "coherent_energy",
    "coherent_grid",
    "coherent_norm",
    "coherent_psi",
    "coherent_psi_minus_label",
    "coherent_psi_series",
    "coherent_term_size",
    "log_coherent_coeff",
    "measure_mu_weight",
    "resolution_element",
    "resolution_matrix",
]
