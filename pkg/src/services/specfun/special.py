"""
Special functions underpinning every closed form.

Log-Gamma comes from scipy's `gammaln` (a Lanczos-type evaluation);
every Gamma ratio in the package is assembled in log-space from it and
exponentiated last, because Gamma(2k+n) leaves the double range near
n = 170. Laguerre polynomials use the forward three-term recurrence,
which is stable for both signs of the argument in the regime used here
(degree up to a few hundred at moderate |x|).
"""

import math

import numpy as np
from scipy import special

from src.core.errors import DomainError, NumericOverflowError
from src.core.models import LaguerreTable


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"log_gamma needs x > 0, got {x}")
    return float(special.gammaln(x))


def log_beta(a: float, b: float) -> float:
    if not (a > 0 and b > 0):
        raise DomainError(f"beta needs positive arguments, got ({a}, {b})")
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b)


def beta(a: float, b: float) -> float:
    """B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b); symmetric in its arguments bit for bit."""
    return math.exp(log_beta(a, b))


def binomial(p: int, j: int) -> int:
    if not 0 <= j <= p:
        raise DomainError(f"binomial needs 0 <= j <= p, got ({p}, {j})")
    return math.comb(p, j)


def laguerre_all(n_max: int, alpha: float, x: float) -> LaguerreTable:
    """Table L_0^alpha(x) ... L_{n_max}^alpha(x) by forward recurrence."""
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    values = laguerre_columns(n_max, alpha, np.asarray([x], dtype=float))[:, 0]
    return LaguerreTable(alpha=alpha, n_max=n_max, x=float(x), values=values)


def laguerre_columns(n_max: int, alpha: float, x: np.ndarray) -> np.ndarray:
    """Rows 0..n_max of L_n^alpha evaluated on every entry of x; shape (n_max+1, len(x))."""
    x = np.asarray(x, dtype=float)
    out = np.empty((n_max + 1,) + x.shape)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 1.0 + alpha - x
    for n in range(1, n_max):
        out[n + 1] = ((2 * n + 1 + alpha - x) * out[n] - (n + alpha) * out[n - 1]) / (n + 1)
    if not np.all(np.isfinite(out)):
        raise NumericOverflowError(
            f"Laguerre recurrence overflowed (n_max={n_max}, alpha={alpha}, max|x|={np.max(np.abs(x))})"
        )
    return out


def laguerre(n: int, alpha: float, x) -> np.ndarray:
    """L_n^alpha(x) on scalars or arrays; the zero polynomial for n < 0."""
    x = np.asarray(x, dtype=float)
    if n < 0:
        return np.zeros_like(x)
    return laguerre_columns(n, alpha, x)[n]
