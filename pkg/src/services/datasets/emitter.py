"""
Columnar datasets for the curves worth plotting: potentials, eigenfunctions,
measures, curvatures, metrics, symbols, kernels and flow trajectories.

Each builder returns a pandas DataFrame; `write_dataset` serializes it as
CSV or as a JSON array of row objects, floats at 17 significant digits in both.
"""

import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, Optional

import numpy as np
import pandas as pd

from src.core.errors import UsageError
from src.core.models import ModelParams, System
from src.core.utils import dumps_json
from src.infrastructure.logging import get_logger
from src.services.darboux import A_p, V_p, make_context, phi
from src.services.geometry import curvature, f0, f1, g0, g1, hamilton_flow, symbol
from src.services.holomorphic import bergman0, bergman1
from src.services.oscillator import measure_mu_weight, potential, psi
from src.services.transformed_coherent import measure_h

logger = get_logger(__name__)


@dataclass(frozen=True)
class EmitRequest:
    params: ModelParams
    lo: Optional[float] = None
    hi: Optional[float] = None
    points: int = 500
    n_max: int = 5
    system: Optional[System] = None
    z0: complex = 0.5
    t_end: float = 2 * np.pi
    dt: float = 1e-3

    def span(self, lo: float, hi: float) -> np.ndarray:
        lo = lo if self.lo is None else self.lo
        hi = hi if self.hi is None else self.hi
        if not lo < hi or self.points < 2:
            raise UsageError(f"empty range [{lo}, {hi}] with {self.points} points")
        return np.linspace(lo, hi, self.points)


Builder = Callable[[EmitRequest], pd.DataFrame]
_DATASETS: Dict[str, Builder] = {}


def dataset(kind: str):
    def decorator(func: Builder) -> Builder:
        _DATASETS[kind] = func
        return func
    return decorator


def dataset_kinds() -> list[str]:
    return list(_DATASETS)


def _systems(req: EmitRequest) -> list[System]:
    return list(System) if req.system is None else [req.system]


@dataset("potential")
def potential_dataset(req: EmitRequest) -> pd.DataFrame:
    x = req.span(0.1, 10.0)
    if x[0] <= 0:
        raise UsageError("potential needs x > 0")
    ctx = make_context(req.params)
    return pd.DataFrame({"x": x, "V0": potential(req.params, x), "Vp": V_p(ctx, x), "Ap": A_p(ctx, x)})


@dataset("eigen")
def eigen_dataset(req: EmitRequest) -> pd.DataFrame:
    x = req.span(0.05, 10.0)
    if x[0] <= 0:
        raise UsageError("eigenfunctions need x > 0")
    ctx = make_context(req.params)
    columns = {"x": x}
    for n in range(req.n_max + 1):
        columns[f"psi_{n}"] = psi(req.params, n, x)
    for n in range(req.n_max + 1):
        columns[f"phi_{n}"] = phi(ctx, n, x)
    return pd.DataFrame(columns)


@dataset("measure")
def measure_dataset(req: EmitRequest) -> pd.DataFrame:
    s = req.span(0.01, 0.95)
    return pd.DataFrame({"s": s, "mu": measure_mu_weight(req.params, s), "h": measure_h(req.params, s)})


@dataset("curvature")
def curvature_dataset(req: EmitRequest) -> pd.DataFrame:
    s = req.span(0.0, 0.95)
    columns = {"s": s}
    for system in _systems(req):
        columns[f"K_{system.value}"] = [curvature(req.params, system, np.sqrt(v)) for v in s]
    return pd.DataFrame(columns)


@dataset("metric")
def metric_dataset(req: EmitRequest) -> pd.DataFrame:
    s = req.span(0.0, 0.95)
    q = req.params
    return pd.DataFrame({"s": s, "f0": f0(q, s), "f1": f1(q, s), "g0": g0(q, s), "g1": g1(q, s)})


@dataset("symbols")
def symbols_dataset(req: EmitRequest) -> pd.DataFrame:
    s = req.span(0.0, 0.95)
    q = req.params
    r = np.sqrt(s)
    return pd.DataFrame({
        "s": s,
        "K0": [symbol(q, "K0", v).real for v in r],
        "H1": [symbol(q, "H1", v).real for v in r],
        "P0": [symbol(q, "P0", v).real for v in r],
        "abs_P+": [abs(symbol(q, "P+", v)) for v in r],
    })


@dataset("kernel")
def kernel_dataset(req: EmitRequest) -> pd.DataFrame:
    """Diagonal Bergman kernels delta(z, conj z) along the real radius."""
    r = req.span(0.0, 0.95)
    q = req.params
    return pd.DataFrame({
        "r": r,
        "delta0": [bergman0(q, v, v).real for v in r],
        "delta1": [bergman1(q, v, v).real for v in r],
    })


@dataset("trajectory")
def trajectory_dataset(req: EmitRequest) -> pd.DataFrame:
    frames = []
    for system in _systems(req):
        path = hamilton_flow(req.params, system, req.z0, req.t_end, req.dt)
        frames.append(pd.DataFrame({
            "system": system.value,
            "t": path.times,
            "re": path.z.real,
            "im": path.z.imag,
            "modulus": np.abs(path.z),
            "energy": path.energy,
        }))
    return pd.concat(frames, ignore_index=True)


def build_dataset(kind: str, req: EmitRequest) -> pd.DataFrame:
    if kind not in _DATASETS:
        raise UsageError(f"unknown dataset {kind!r}; expected one of {dataset_kinds()}")
    frame = _DATASETS[kind](req)
    logger.info("Dataset built", kind=kind, rows=len(frame), columns=list(frame.columns))
    return frame


def render(frame: pd.DataFrame, fmt: str) -> str:
    if fmt == "csv":
        return frame.to_csv(index=False, float_format="%.17g")
    if fmt == "json":
        return dumps_json(frame.to_dict(orient="records"), indent=1) + "\n"
    raise UsageError(f"unknown format {fmt!r}; expected csv or json")


def write_dataset(frame: pd.DataFrame, fmt: str, out: Optional[Path] = None) -> None:
    """Write to `out`, or to stdout when no path is given. OSError propagates."""
    text = render(frame, fmt)
    if out is None:
        sys.stdout.write(text)
        return
    Path(out).write_text(text, encoding="utf-8")
    logger.info("Dataset written", path=str(out), rows=len(frame))
