import math
from typing import Callable

from src.config.settings import settings
from src.core.errors import ConvergenceError


def truncation_order(
    magnitude: Callable[[int], float],
    tol: float | None = None,
    cap: int | None = None,
) -> int:
    """Number of terms to keep in a coefficient series.

    Returns the smallest N with |term_N| / max(|term_0..N|) < tol, i.e.
    terms 0..N-1 are summed. `magnitude(n)` must be the coefficient size
    |b_n z^n| (never the size times a wavefunction value, which can pass
    through zero long before the series has converged).
    """
    tol = settings.tolerances.series if tol is None else tol
    cap = settings.quadrature.series_cap if cap is None else cap
    largest = 0.0
    for n in range(cap + 1):
        m = magnitude(n)
        largest = max(largest, m)
        if n > 0 and (largest == 0.0 or m / largest < tol):
            return n
    raise ConvergenceError(f"series did not reach relative size {tol} within {cap} terms",
                           last=magnitude(cap), previous=0.0)


def power_series(log_coeff: Callable[[int], float], w: complex, tol: float | None = None,
                 cap: int | None = None) -> tuple[complex, int]:
    """sum_n exp(log_coeff(n)) w^n for positive coefficients, cut by `truncation_order`.

    Returns the sum and the number of terms used.
    """
    w = complex(w)
    r = abs(w)

    def size(n: int) -> float:
        if r == 0.0:
            return 1.0 if n == 0 else 0.0
        return math.exp(log_coeff(n) + n * math.log(r))

    n_terms = truncation_order(size, tol, cap)
    total = sum(math.exp(log_coeff(n)) * w**n for n in range(n_terms))
    return complex(total), n_terms
