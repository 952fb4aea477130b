"""
Typed records for the classical (disk phase-space) layer.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from src.core.models.holo import System
from src.core.models.params import ModelParams

RadialMap = Callable[[np.ndarray], np.ndarray]
ComplexMap = Callable[[complex], complex]


@dataclass(frozen=True)
class KahlerStructure:
    """Kähler potential f(s) and metric g(s), s = |z|^2, of one system."""
    system: System
    params: ModelParams
    potential: RadialMap
    metric: RadialMap


@dataclass(frozen=True)
class Observable:
    """A classical observable with its Wirtinger derivatives.

    Attributes:
        value: F(z).
        dz: dF/dz at z.
        dzbar: dF/dz-bar at z.
        name: Label used in logs and reports.
    """
    value: ComplexMap
    dz: ComplexMap
    dzbar: ComplexMap
    name: str = "F"


@dataclass(frozen=True)
class ClassicalState:
    z: complex
    time: float


@dataclass(frozen=True)
class Trajectory:
    """Integrated flow z(t) under one system's bracket."""
    system: System
    times: np.ndarray
    z: np.ndarray
    energy: np.ndarray

    def states(self) -> list[ClassicalState]:
        return [ClassicalState(complex(z), float(t)) for t, z in zip(self.times, self.z)]

    @property
    def modulus_drift(self) -> float:
        r = np.abs(self.z)
        return float(np.max(np.abs(r - r[0])))

    @property
    def energy_drift(self) -> float:
        return float(np.max(np.abs(self.energy - self.energy[0])))
