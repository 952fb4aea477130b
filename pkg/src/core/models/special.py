from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class LaguerreTable:
    """L_0^alpha(x) ... L_{n_max}^alpha(x) at a single argument.

    Attributes:
        alpha: Laguerre parameter.
        n_max: Highest degree in the table.
        x: Argument (negative values allowed).
        values: values[n] = L_n^alpha(x).
    """
    alpha: float
    n_max: int
    x: float
    values: np.ndarray

    def __getitem__(self, n: int) -> float:
        # Negative lower index is the zero polynomial.
        if n < 0:
            return 0.0
        return float(self.values[n])

    def recurrence_residual(self, relative_to: str = "value") -> float:
        """Largest scaled residual of (n+1)L_{n+1} - (2n+1+a-x)L_n + (n+a)L_{n-1}.

        `relative_to="value"` divides by max(1, |L_{n+1}|). For x > 0 the
        recurrence cancels near roots of L_{n+1}, where rounding of the stored
        doubles alone exceeds that scale; `relative_to="terms"` divides by
        max(1, |L_{n+1}|, largest recurrence term / (n+1)) instead.
        """
        if relative_to not in ("value", "terms"):
            raise ValueError(f"relative_to must be 'value' or 'terms', got {relative_to!r}")
        v, a, x = self.values, self.alpha, self.x
        worst = 0.0
        for n in range(1, self.n_max):
            terms = ((n + 1) * v[n + 1], (2 * n + 1 + a - x) * v[n], (n + a) * v[n - 1])
            scale = max(1.0, abs(v[n + 1]))
            if relative_to == "terms":
                scale = max(scale, max(abs(t) for t in terms) / (n + 1))
            worst = max(worst, abs(terms[0] - terms[1] + terms[2]) / scale)
        return worst
