"""
Hamiltonian flow on the disk and the negative polynomial-closure check.

For a radial Hamilton function H(s) the bracket gives
dz/dt = {z, H} = -i z H'(s) / g(s), integrated with classical RK4.
"""

import math

import numpy as np

from src.config.settings import settings
from src.core.errors import ConvergenceError, DomainError, UsageError
from src.core.models import ModelParams, System, Trajectory
from src.infrastructure.logging import get_logger
from src.services.geometry.kahler import metric
from src.services.geometry.symbols import RADIAL, poisson, sample_points, symbol, symbol_observable
from src.services.numerics import radial_derivatives

logger = get_logger(__name__)

# K0 drives the initial flow, P0 the transformed one; both give dz/dt = -i z.
DEFAULT_HAMILTONIAN = {System.INITIAL: "K0", System.TRANSFORMED: "P0"}


def _velocity(params: ModelParams, system: System, hamiltonian: str, z: complex) -> complex:
    s = abs(z) ** 2
    h_prime, _ = radial_derivatives(lambda t: RADIAL[hamiltonian](params, t), s)
    return -1j * z * h_prime / float(metric(params, system, s))


def _rk4_step(f, z: complex, dt: float) -> complex:
    k1 = f(z)
    k2 = f(z + 0.5 * dt * k1)
    k3 = f(z + 0.5 * dt * k2)
    k4 = f(z + dt * k3)
    return z + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)


def hamilton_flow(params: ModelParams, system: System, z0: complex, t_end: float | None = None,
                  dt: float | None = None, hamiltonian: str | None = None,
                  max_halvings: int = 4) -> Trajectory:
    """Integrate dz/dt = {z, H} from z0 over [0, t_end].

    A step whose |z| moves by more than the modulus tolerance is retried
    with half the step; after `max_halvings` retries the flow gives up.
    """
    z0 = complex(z0)
    if not abs(z0) < 1.0:
        raise DomainError(f"flow needs |z0| < 1, got {z0}")
    t_end = settings.flow.t_end if t_end is None else t_end
    dt = settings.flow.dt if dt is None else dt
    if not (math.isfinite(dt) and dt > 0):
        raise UsageError(f"flow step must be a positive finite number, got {dt}")
    if not (math.isfinite(t_end) and t_end >= 0):
        raise UsageError(f"flow end time must be finite and >= 0, got {t_end}")
    hamiltonian = DEFAULT_HAMILTONIAN[system] if hamiltonian is None else hamiltonian
    if hamiltonian not in RADIAL:
        raise UsageError(f"flow needs a radial Hamilton function, one of {sorted(RADIAL)}; got {hamiltonian!r}")
    steps = max(1, int(round(t_end / dt)))
    dt = t_end / steps
    tol = settings.tolerances.modulus

    def velocity(z: complex) -> complex:
        return _velocity(params, system, hamiltonian, z)

    zs = np.empty(steps + 1, dtype=complex)
    zs[0] = z0
    for i in range(steps):
        z = zs[i]
        for halving in range(max_halvings + 1):
            sub = 2**halving
            trial = z
            for _ in range(sub):
                trial = _rk4_step(velocity, trial, dt / sub)
            if abs(abs(trial) - abs(z)) <= tol:
                break
        else:
            raise ConvergenceError(f"|z| drifted past {tol} at step {i}", last=abs(trial), previous=abs(z))
        zs[i + 1] = trial
    times = np.linspace(0.0, t_end, steps + 1)
    energy = np.array([symbol(params, hamiltonian, z).real for z in zs])
    logger.debug("Flow integrated", system=system.value, hamiltonian=hamiltonian, steps=steps)
    return Trajectory(system=system, times=times, z=zs, energy=energy)


def exact_flow(z0: complex, times: np.ndarray, rate: float = 1.0) -> np.ndarray:
    """z0 e^(-i rate t)."""
    return complex(z0) * np.exp(-1j * rate * np.asarray(times))


def nonpolynomial_residual(params: ModelParams, count: int | None = None, seed: int | None = None,
                           degree: int = 3) -> float:
    """Largest residual of the best degree-`degree` fit of {P-, P+} by a polynomial in P0.

    At p = 0 the bracket is an exact cubic in P0; for p >= 1 the residual
    stays well away from zero.
    """
    count = settings.verify.sample_points if count is None else count
    seed = settings.verify.seed if seed is None else seed
    points = sample_points(count, seed)
    p_minus = symbol_observable(params, "P-")
    p_plus = symbol_observable(params, "P+")
    bracket = np.array([poisson(params, System.TRANSFORMED, p_minus, p_plus, z) for z in points])
    p0 = np.array([symbol(params, "P0", z).real for z in points])
    # {P-, P+} is purely imaginary
    target = bracket.imag
    coeffs = np.polyfit(p0, target, degree)
    return float(np.max(np.abs(np.polyval(coeffs, p0) - target)))
