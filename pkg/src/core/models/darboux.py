from dataclasses import dataclass

import numpy as np

from src.core.models.grid import RadialGrid
from src.core.models.params import ModelParams


@dataclass(frozen=True)
class DarbouxContext:
    """Parameters plus the Laguerre values u_p needs on one grid.

    Attributes:
        params: Model parameters; p selects u_p.
        grid: Grid the tables were built on.
        lag_p: L_p^(2k-1)(y) at y = -x^2/2, strictly positive.
        lag_p1: L_{p-1}^(2k)(y), zero when p = 0.
        lag_p2: L_{p-2}^(2k+1)(y), zero when p < 2.
    """
    params: ModelParams
    grid: RadialGrid
    lag_p: np.ndarray
    lag_p1: np.ndarray
    lag_p2: np.ndarray

    def norm_factor(self, n: int) -> float:
        """N_n = (2n + 4k + 2p)^(-1/2)."""
        return (2.0 * n + 4.0 * self.params.k + 2.0 * self.params.p) ** -0.5
