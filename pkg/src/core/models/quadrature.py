from dataclasses import dataclass
from enum import Enum

import numpy as np


class Scheme(Enum):
    HALFLINE = "halfline"    # composite Gauss-Legendre on (0, x_max]
    JACOBI = "jacobi"        # Gauss-Jacobi in s with the rim power in the weight
    LEGENDRE = "legendre"    # Gauss-Legendre in s over [0, s_max]


@dataclass(frozen=True)
class QuadratureSpec:
    """How an integral is discretised and when it counts as converged.

    Attributes:
        scheme: Node family.
        panels: Panel count (HALFLINE) - ignored by the disk schemes.
        nodes: Nodes per panel (HALFLINE) or radial nodes (disk schemes).
        s_max: Rim cutoff for the LEGENDRE disk scheme.
        tolerance: Accept when doubling changes the result by less than this.
        max_doublings: Give up after this many doublings.
        x_max: Upper end of the half-line panels.
    """
    scheme: Scheme = Scheme.JACOBI
    panels: int = 40
    nodes: int = 64
    s_max: float = 1.0 - 1e-6
    tolerance: float = 1e-12
    max_doublings: int = 6
    x_max: float = 30.0

    def doubled(self) -> "QuadratureSpec":
        if self.scheme is Scheme.HALFLINE:
            return QuadratureSpec(self.scheme, 2 * self.panels, self.nodes, self.s_max,
                                  self.tolerance, self.max_doublings, self.x_max)
        return QuadratureSpec(self.scheme, self.panels, 2 * self.nodes, self.s_max,
                              self.tolerance, self.max_doublings, self.x_max)


@dataclass(frozen=True)
class QuadratureResult:
    """Accepted value together with the coarser value it was compared against."""
    value: complex
    previous: complex
    nodes: int

    @property
    def residual(self) -> float:
        return abs(self.value - self.previous)


@dataclass(frozen=True)
class DiskQuadrature:
    """Product rule over the unit disk: radial rule in s = |z|^2 times a uniform angle rule.

    Attributes:
        s: Radial nodes in [0, 1).
        ws: Radial weights for plain integrals over s (rim power already divided out).
        theta: Angular nodes.
        wtheta: Angular weight (2 pi / M).
    """
    s: np.ndarray
    ws: np.ndarray
    theta: np.ndarray
    wtheta: float
