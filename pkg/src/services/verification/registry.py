from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, List, NamedTuple, Optional

import numpy as np

from src.config.settings import Settings, ToleranceSettings
from src.core.models import DarbouxContext, ModelParams, QuadratureSpec, RadialGrid, System, Trajectory
from src.services.darboux import make_context
from src.services.geometry import hamilton_flow, sample_points
from src.services.numerics import radial_spec, reference_grid, stencil_grid

_CHECK_REGISTRY: Dict[str, Dict] = {}
FLOW_START = 0.5


class Outcome(NamedTuple):
    """What a check measured.

    `lower_bound` flips the comparison: the check passes when the residual
    stays ABOVE the tolerance. `skip` carries a reason when the check does
    not apply to the current parameters.
    """
    residual: float
    tolerance: float
    detail: str = ""
    lower_bound: bool = False
    skip: Optional[str] = None


@dataclass
class SuiteContext:
    """Everything a check may read, plus the slots checks write back into the report."""
    params: ModelParams
    n_max: int
    cfg: Settings
    conventions: Dict[str, str] = field(default_factory=dict)
    gram_transformed: Optional[np.ndarray] = None

    @property
    def tol(self) -> ToleranceSettings:
        return self.cfg.tolerances

    def radial_spec(self, tolerance: float) -> QuadratureSpec:
        """Radial quadrature spec from this run's settings, not the global ones."""
        return radial_spec(tolerance, quadrature=self.cfg.quadrature)

    @cached_property
    def darboux(self) -> DarbouxContext:
        return make_context(self.params, stencil_grid(n=self.cfg.grid.stencil_nodes,
                                                      x_max=self.cfg.grid.stencil_x_max))

    @cached_property
    def reference(self) -> RadialGrid:
        return reference_grid(self.params, self.n_max, total_nodes=self.cfg.grid.gauss_nodes,
                              panels=self.cfg.grid.panels)

    @cached_property
    def points(self) -> np.ndarray:
        return sample_points(self.cfg.verify.sample_points, self.cfg.verify.seed)

    @cached_property
    def flows(self) -> Dict[System, Trajectory]:
        """Both systems flowed from FLOW_START under their default Hamilton functions."""
        flow = self.cfg.flow
        return {system: hamilton_flow(self.params, system, FLOW_START, flow.t_end, flow.dt) for system in System}

    @cached_property
    def polar_sample(self) -> List[complex]:
        """5 x 5 polar grid with |z| <= 0.9."""
        radii = (0.0, 0.3, 0.5, 0.7, 0.9)
        angles = 2 * np.pi * np.arange(5) / 5
        return [complex(r * np.exp(1j * a)) for r in radii for a in angles]


CheckFn = Callable[[SuiteContext], Outcome]


def register_check(name: str, anchor: str):
    """Add a check to the suite; checks run in registration order."""
    def decorator(func: CheckFn) -> CheckFn:
        if name in _CHECK_REGISTRY:
            raise ValueError(f"check {name!r} registered twice")
        _CHECK_REGISTRY[name] = {"function": func, "anchor": anchor}
        return func
    return decorator


def get_all_checks() -> List[str]:
    return list(_CHECK_REGISTRY)


def get_check(name: str) -> Dict:
    return _CHECK_REGISTRY[name]
