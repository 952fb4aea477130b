"""
Finite-difference stencils. They are used only to CHECK identities;
operators themselves are applied through analytic derivatives.
"""

from typing import Callable, Tuple

import numpy as np

from src.config.settings import settings
from src.core.errors import UsageError

# 5-point central weights, O(h^4)
_D1 = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
_D2 = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0
# one-sided 5-point rows for the first two nodes (mirrored at the far end)
_D1_EDGE = (np.array([-25.0, 48.0, -36.0, 16.0, -3.0]) / 12.0,
            np.array([-3.0, -10.0, 18.0, -6.0, 1.0]) / 12.0)
_D2_EDGE = (np.array([35.0, -104.0, 114.0, -56.0, 11.0]) / 12.0,
            np.array([11.0, -20.0, 6.0, 4.0, -1.0]) / 12.0)


def stencil_d2(window, h: float) -> float:
    """Second derivative at the centre of five equally spaced samples."""
    window = np.asarray(window)
    if window.shape != (5,):
        raise UsageError("stencil_d2 needs exactly 5 samples")
    return np.dot(_D2, window) / h**2


def stencil_d1(window, h: float) -> float:
    window = np.asarray(window)
    if window.shape != (5,):
        raise UsageError("stencil_d1 needs exactly 5 samples")
    return np.dot(_D1, window) / h


def _apply(values: np.ndarray, h: float, central: np.ndarray, edge: Tuple[np.ndarray, np.ndarray],
           power: int, mirror_sign: float) -> np.ndarray:
    values = np.asarray(values)
    n = values.size
    if n < 5:
        raise UsageError(f"stencils need at least 5 nodes, got {n}")
    out = np.empty_like(values)
    out[2:-2] = (central[0] * values[:-4] + central[1] * values[1:-3] + central[2] * values[2:-2]
                 + central[3] * values[3:-1] + central[4] * values[4:])
    out[0] = np.dot(edge[0], values[:5])
    out[1] = np.dot(edge[1], values[:5])
    # mirrored rows: odd derivatives flip sign
    out[-1] = mirror_sign * np.dot(edge[0], values[::-1][:5])
    out[-2] = mirror_sign * np.dot(edge[1], values[::-1][:5])
    return out / h**power


def d2_uniform(values: np.ndarray, h: float) -> np.ndarray:
    """Second derivative on a uniform grid: central inside, one-sided at both ends."""
    return _apply(values, h, _D2, _D2_EDGE, 2, 1.0)


def d1_uniform(values: np.ndarray, h: float) -> np.ndarray:
    return _apply(values, h, _D1, _D1_EDGE, 1, -1.0)


def rim_step(s: float) -> float:
    """Step for s-derivatives: never crosses the rim s = 1."""
    cfg = settings.stencil
    return min(cfg.max_step, cfg.rim_fraction * (1.0 - s))


def radial_derivatives(F: Callable[[np.ndarray], np.ndarray], s: float,
                       h: float | None = None) -> Tuple[float, float]:
    """(F'(s), F''(s)) by 5-point central stencils in s."""
    h = rim_step(s) if h is None else h
    window = F(s + h * np.arange(-2, 3, dtype=float))
    return float(stencil_d1(window, h)), float(stencil_d2(window, h))


def wirtinger(F: Callable[[complex], complex], z: complex,
              h: float | None = None) -> Tuple[complex, complex]:
    """(dF/dz, dF/dz-bar) from 5-point stencils along Re z and Im z."""
    if h is None:
        h = settings.stencil.wirtinger_fraction * (1.0 - abs(z))
    offsets = h * np.arange(-2, 3, dtype=float)
    fx = np.array([F(z + d) for d in offsets])
    fy = np.array([F(z + 1j * d) for d in offsets])
    dx = stencil_d1(fx, h)
    dy = stencil_d1(fy, h)
    return 0.5 * (dx - 1j * dy), 0.5 * (dx + 1j * dy)


def window_max(x: np.ndarray, values: np.ndarray, x_min: float | None = None) -> float:
    """max |values| over x >= x_min, the window where stencil residuals are read."""
    x_min = settings.grid.residual_x_min if x_min is None else x_min
    mask = np.asarray(x) >= x_min
    if not np.any(mask):
        raise UsageError(f"no grid node at or beyond x = {x_min}")
    return float(np.max(np.abs(np.asarray(values)[mask])))
