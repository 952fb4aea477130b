"""
Operators on the holomorphic disk representation as exact maps of
Taylor coefficients.

Initial system (psi_n(z) = a_n z^n):
    k0 = z d/dz + k, k- = d/dz, k+ = z^2 d/dz + 2k z
Transformed system (phi_n(z) = b_n z^n), c = 2k + p:
    p0 = z d/dz + k
    p- = 2z d^2/dz^2 + 2c d/dz                  z^n -> 2n(n-1+c) z^(n-1)
    p+ :                                        z^n -> 2(n+2k)(n+c+1) z^(n+1)
    L  = sqrt(2/c)(z d/dz + c)                  initial -> transformed
    L+ = sqrt(2c)                               transformed -> initial
"""

from typing import Callable, Dict

import numpy as np

from src.config.settings import settings
from src.core.errors import TruncationLossError, UsageError
from src.core.models import HoloSeries, ModelParams, System

Factor = Callable[[ModelParams, np.ndarray], np.ndarray]


def _diagonal(factor: Factor) -> Callable[[HoloSeries], np.ndarray]:
    def apply(series: HoloSeries) -> np.ndarray:
        n = np.arange(series.coeffs.size)
        return factor(series.params, n) * series.coeffs
    return apply


def _lowering(factor: Factor) -> Callable[[HoloSeries], np.ndarray]:
    # new_m = factor(m+1) c_{m+1}
    def apply(series: HoloSeries) -> np.ndarray:
        c = series.coeffs
        if c.size <= 1:
            return np.zeros(1, dtype=complex)
        n = np.arange(1, c.size)
        return factor(series.params, n) * c[1:]
    return apply


def _raising(factor: Factor) -> Callable[[HoloSeries], np.ndarray]:
    # new_{m+1} = factor(m) c_m
    def apply(series: HoloSeries) -> np.ndarray:
        c = series.coeffs
        n = np.arange(c.size)
        out = np.zeros(c.size + 1, dtype=complex)
        out[1:] = factor(series.params, n) * c
        return out
    return apply


INITIAL_OPS: Dict[str, Callable[[HoloSeries], np.ndarray]] = {
    "k0": _diagonal(lambda q, n: n + q.k),
    "k-": _lowering(lambda q, n: n.astype(float)),
    "k+": _raising(lambda q, n: n + 2 * q.k),
}

TRANSFORMED_OPS: Dict[str, Callable[[HoloSeries], np.ndarray]] = {
    "p0": _diagonal(lambda q, n: n + q.k),
    "p-": _lowering(lambda q, n: 2.0 * n * (n - 1 + q.c)),
    "p+": _raising(lambda q, n: 2.0 * (n + 2 * q.k) * (n + q.c + 1)),
}


def compact_p_plus_factor(params: ModelParams, n: int) -> float:
    """z^(n+1) coefficient of 2z^3 d^2/dz^2 + 2z(c+2)(z d/dz + 2k) on z^n.

    Matches the matrix elements only at n = 1.
    """
    return 2.0 * n * (n - 1) + 2.0 * (params.c + 2) * (n + 2 * params.k)


def _enforce_cap(coeffs: np.ndarray, cap: int | None) -> np.ndarray:
    cap = settings.quadrature.series_cap if cap is None else cap
    if coeffs.size - 1 > cap:
        lost = float(np.max(np.abs(coeffs[cap + 1:])))
        if lost != 0.0:
            raise TruncationLossError(
                f"operator pushed a non-zero coefficient past degree {cap}", lost=lost)
        coeffs = coeffs[: cap + 1]
    return coeffs


def apply_op_initial(op_id: str, series: HoloSeries, cap: int | None = None) -> HoloSeries:
    if op_id not in INITIAL_OPS:
        raise UsageError(f"unknown initial-system operator {op_id!r}; expected one of {sorted(INITIAL_OPS)}")
    if series.system is not System.INITIAL:
        raise UsageError(f"{op_id} acts on the initial system, got a {series.system.value} series")
    return series.with_coeffs(_enforce_cap(INITIAL_OPS[op_id](series), cap))


def apply_op_transformed(op_id: str, series: HoloSeries, cap: int | None = None) -> HoloSeries:
    """Transformed-system operators plus the intertwiners L (initial -> transformed) and L+."""
    params = series.params
    if op_id == "L":
        if series.system is not System.INITIAL:
            raise UsageError("L maps the initial representation; got a transformed series")
        n = np.arange(series.coeffs.size)
        coeffs = np.sqrt(2.0 / params.c) * (n + params.c) * series.coeffs
        return HoloSeries(coeffs.astype(complex), System.TRANSFORMED, params)
    if op_id == "L+":
        if series.system is not System.TRANSFORMED:
            raise UsageError("L+ maps the transformed representation; got an initial series")
        return HoloSeries(np.sqrt(2.0 * params.c) * series.coeffs, System.INITIAL, params)
    if op_id not in TRANSFORMED_OPS:
        raise UsageError(
            f"unknown transformed-system operator {op_id!r}; expected one of {sorted(TRANSFORMED_OPS) + ['L', 'L+']}")
    if series.system is not System.TRANSFORMED:
        raise UsageError(f"{op_id} acts on the transformed system, got an initial series")
    return series.with_coeffs(_enforce_cap(TRANSFORMED_OPS[op_id](series), cap))


def monomial(params: ModelParams, system: System, n: int, scale: complex = 1.0) -> HoloSeries:
    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[n] = scale
    return HoloSeries(coeffs, system, params)


def commutator(apply: Callable[[str, HoloSeries], HoloSeries], lower: str, upper: str,
               series: HoloSeries) -> np.ndarray:
    """Coefficients of [lower, upper] series, padded to a common length."""
    a = apply(lower, apply(upper, series)).coeffs
    b = apply(upper, apply(lower, series)).coeffs
    size = max(a.size, b.size)
    return np.pad(a, (0, size - a.size)) - np.pad(b, (0, size - b.size))
