"""
Sampled half-line objects: quadrature/stencil grids and wavefunction samples.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from src.core.errors import UsageError


class GridKind(Enum):
    GAUSS = "gauss"      # composite Gauss-Legendre, for inner products
    UNIFORM = "uniform"  # equally spaced, for stencils


@dataclass(frozen=True)
class RadialGrid:
    """Nodes on (0, x_max] with quadrature weights for integrals over [0, inf).

    Attributes:
        nodes: Strictly increasing, strictly positive abscissae.
        weights: Positive weights; sum(w * f(nodes)) approximates the integral.
        kind: GAUSS grids carry accurate weights, UNIFORM grids carry
            trapezoid weights and exist for finite-difference stencils.
    """
    nodes: np.ndarray
    weights: np.ndarray
    kind: GridKind = GridKind.GAUSS

    def __post_init__(self):
        if self.nodes.shape != self.weights.shape:
            raise UsageError("nodes and weights must have the same shape")
        if self.nodes.size and self.nodes[0] <= 0.0:
            raise UsageError("grid nodes must be strictly positive")

    @property
    def size(self) -> int:
        return int(self.nodes.size)

    @property
    def x_max(self) -> float:
        return float(self.nodes[-1])

    @property
    def spacing(self) -> float:
        """Step of a UNIFORM grid; GAUSS grids have none."""
        if self.kind is not GridKind.UNIFORM:
            raise UsageError("stencils need a uniform grid")
        return float(self.nodes[1] - self.nodes[0])

    def integrate(self, values: np.ndarray) -> complex:
        return np.sum(self.weights * values)


@dataclass
class StateVector:
    """Wavefunction samples on a grid, optionally with the analytic x-derivative."""
    grid: RadialGrid
    values: np.ndarray
    derivative: Optional[np.ndarray] = field(default=None)

    def __post_init__(self):
        self.values = np.asarray(self.values)
        if self.values.shape != self.grid.nodes.shape:
            raise UsageError("state samples do not match the grid")

    def norm2(self) -> float:
        return float(np.real(self.grid.integrate(np.abs(self.values) ** 2)))

    def inner(self, other: "StateVector") -> complex:
        return complex(self.grid.integrate(np.conj(self.values) * other.values))

    def scaled(self, factor: complex) -> "StateVector":
        derivative = None if self.derivative is None else factor * self.derivative
        return StateVector(self.grid, factor * self.values, derivative)
