from dataclasses import dataclass
from enum import Enum

import numpy as np

from src.core.models.params import ModelParams


class System(Enum):
    INITIAL = "initial"
    TRANSFORMED = "transformed"


@dataclass(frozen=True)
class HoloSeries:
    """A vector in the holomorphic disk representation.

    `coeffs[n]` is the Taylor coefficient of z^n of the holomorphic
    function, i.e. a_n c_n (initial) or b_n c_n (transformed) where c_n
    is the Fourier coefficient against |n> or |phi_n>.
    """
    coeffs: np.ndarray
    system: System
    params: ModelParams

    @property
    def degree(self) -> int:
        return int(self.coeffs.size) - 1

    def __call__(self, z) -> np.ndarray:
        # Horner, highest degree first.
        z = np.asarray(z, dtype=complex)
        out = np.zeros_like(z)
        for c in self.coeffs[::-1]:
            out = out * z + c
        return out

    def with_coeffs(self, coeffs: np.ndarray) -> "HoloSeries":
        return HoloSeries(np.asarray(coeffs, dtype=complex), self.system, self.params)
