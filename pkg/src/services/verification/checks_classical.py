"""Checks on the classical phase spaces: metrics, curvature, brackets and flows."""

import numpy as np

from src.core.models import System
from src.services.geometry import (
    DEFAULT_HAMILTONIAN,
    coordinate,
    curvature,
    exact_flow,
    f0,
    f1,
    g0,
    g1,
    metric_from_potential,
    nonpolynomial_residual,
    poisson,
    polynomial_observable,
    product,
    symbol,
    symbol_observable,
    symbol_series,
)
from src.services.holomorphic import bergman0, bergman1, coherent_overlap_initial
from src.services.oscillator import make_params, measure_mu_weight
from src.services.transformed_coherent import measure_h, zeta1
from src.services.verification.registry import FLOW_START, Outcome, SuiteContext, register_check


def _relative(value: complex, expected: complex) -> float:
    return abs(value - expected) / max(abs(expected), 1e-300)


def _scaled(value: complex, expected: complex) -> float:
    return abs(value - expected) / max(1.0, abs(expected))


@register_check("metric_from_potential", "g = F' + s F'' for f0 and f1")
def check_metric(run: SuiteContext) -> Outcome:
    residual = 0.0
    for system in System:
        for s in np.linspace(0.0, 0.99, 34):
            derived, closed = metric_from_potential(run.params, system, float(s))
            residual = max(residual, _relative(derived, closed))
    return Outcome(residual, run.tol.inner_product, "relative, s in [0, 0.99]")


@register_check("curvature_initial", "K = -2/k")
def check_curvature_initial(run: SuiteContext) -> Outcome:
    expected = -2.0 / run.params.k
    residual = max(abs(curvature(run.params, System.INITIAL, z) - expected) for z in run.points)
    return Outcome(residual, run.tol.check)


@register_check("curvature_reduction", "p = 0: transformed curvature = -2/(k + 1/2)")
def check_curvature_reduction(run: SuiteContext) -> Outcome:
    q0 = make_params(run.params.b, 0)
    expected = -2.0 / (q0.k + 0.5)
    residual = max(abs(curvature(q0, System.TRANSFORMED, z) - expected) for z in run.points)
    return Outcome(residual, run.tol.check)


@register_check("curvature_large_k", "transformed curvature -> 0 as k -> infinity")
def check_curvature_large_k(run: SuiteContext) -> Outcome:
    big = make_params(run.cfg.verify.large_b, run.params.p)
    value = max(abs(curvature(big, System.TRANSFORMED, z)) for z in run.points)
    return Outcome(value, run.cfg.verify.curvature_bound, f"b = {run.cfg.verify.large_b:g}, k = {big.k:.6g}")


@register_check("reductions_p0", "p = 0 transformed objects equal the initial ones at k' = k + 1/2")
def check_reductions(run: SuiteContext) -> Outcome:
    q0 = make_params(run.params.b, 0)
    shifted = q0.shifted()
    s = np.linspace(0.0, 0.95, 20)
    residual = max(
        float(np.max(np.abs(measure_h(q0, s[1:]) / measure_mu_weight(shifted, s[1:]) - 1.0))),
        float(np.max(np.abs(g1(q0, s) / g0(shifted, s) - 1.0))),
        float(np.max(np.abs(f1(q0, s) - f0(shifted, s)))),
    )
    for zeta, z in zip(run.points[:5], run.points[5:10]):
        t = complex(np.conj(z))
        residual = max(residual,
                       _relative(zeta1(q0, zeta, z), coherent_overlap_initial(shifted, zeta, z)),
                       _relative(bergman1(q0, zeta, t), bergman0(shifted, zeta, t)))
    return Outcome(residual, run.tol.reduction, "h, zeta1, delta1, g1, f1")


@register_check("bracket_sign", "{z, K0} = -i z")
def check_bracket_sign(run: SuiteContext) -> Outcome:
    k0 = symbol_observable(run.params, "K0")
    z_obs = coordinate()
    residual = max(_scaled(poisson(run.params, System.INITIAL, z_obs, k0, z), -1j * z) for z in run.points)
    run.conventions["bracket_sign"] = "{F, G} = (i/g)(dF/dz* dG/dz - dF/dz dG/dz*)"
    return Outcome(residual, run.tol.bracket)


@register_check("su11_brackets", "{K0, K+-} = +-i K+-, {K-, K+} = 2i K0")
def check_su11(run: SuiteContext) -> Outcome:
    q = run.params
    k0, kp, km = (symbol_observable(q, w) for w in ("K0", "K+", "K-"))
    residual = 0.0
    for z in run.points:
        residual = max(residual,
                       _scaled(poisson(q, System.INITIAL, k0, kp, z), 1j * symbol(q, "K+", z)),
                       _scaled(poisson(q, System.INITIAL, k0, km, z), -1j * symbol(q, "K-", z)),
                       _scaled(poisson(q, System.INITIAL, km, kp, z), 2j * symbol(q, "K0", z)))
    return Outcome(residual, run.tol.bracket, "relative to max(1, |expected|)")


@register_check("transformed_brackets", "{P0, P+-} = +-i P+-")
def check_transformed_brackets(run: SuiteContext) -> Outcome:
    q = run.params
    p0, pp, pm = (symbol_observable(q, w) for w in ("P0", "P+", "P-"))
    residual = 0.0
    for z in run.points:
        residual = max(residual,
                       _scaled(poisson(q, System.TRANSFORMED, p0, pp, z), 1j * symbol(q, "P+", z)),
                       _scaled(poisson(q, System.TRANSFORMED, p0, pm, z), -1j * symbol(q, "P-", z)))
    return Outcome(residual, run.tol.bracket, "relative to max(1, |expected|)")


@register_check("bracket_axioms", "antisymmetry and Leibniz rule of the bracket")
def check_bracket_axioms(run: SuiteContext) -> Outcome:
    F = polynomial_observable({(1, 0): 1.0, (0, 2): 0.5j, (2, 1): -0.3}, "F")
    G = polynomial_observable({(0, 1): 1.0, (1, 1): 0.7, (3, 0): 0.2j}, "G")
    H = polynomial_observable({(2, 0): 1.0, (1, 2): -0.4j}, "H")
    GH = product(G, H)
    residual = 0.0
    for system in System:
        for z in run.points:
            fg = poisson(run.params, system, F, G, z)
            gf = poisson(run.params, system, G, F, z)
            leibniz = (poisson(run.params, system, F, G, z) * H.value(z)
                       + G.value(z) * poisson(run.params, system, F, H, z))
            residual = max(residual, _scaled(fg, -gf),
                           _scaled(poisson(run.params, system, F, GH, z), leibniz))
    return Outcome(residual, run.tol.inner_product)


@register_check("symbol_series", "closed-form symbols equal <z|A|z> summed over the basis")
def check_symbol_series(run: SuiteContext) -> Outcome:
    q = run.params
    residual = 0.0
    for which in ("K0", "K+", "H1", "P0", "P+"):
        for z in run.points[:5]:
            residual = max(residual, _relative(symbol_series(q, which, z), symbol(q, which, z)))
    run.conventions["p_plus_symbol"] = (
        "P+ = 4k z/(c - p s) [(2k+1)(2k+2)/(1-s)^2 + 2(p-1)(2k+1)/(1-s) + p(p-1)]")
    return Outcome(residual, run.tol.kernel, "relative")


def _trajectories(run: SuiteContext):
    run.conventions["flow_hamiltonian"] = (
        f"initial flow under {DEFAULT_HAMILTONIAN[System.INITIAL]}, "
        f"transformed flow under {DEFAULT_HAMILTONIAN[System.TRANSFORMED]}")
    return run.flows


@register_check("flow_coincidence", "both flows trace z0 e^(-it)")
def check_flow(run: SuiteContext) -> Outcome:
    paths = _trajectories(run)
    initial, transformed = paths[System.INITIAL], paths[System.TRANSFORMED]
    exact = exact_flow(FLOW_START, initial.times)
    residual = max(float(np.max(np.abs(initial.z - transformed.z))),
                   float(np.max(np.abs(initial.z - exact))),
                   float(np.max(np.abs(transformed.z - exact))))
    return Outcome(residual, run.tol.flow, f"z0 = {FLOW_START}, t in [0, {run.cfg.flow.t_end:.6g}]")


@register_check("flow_modulus", "|z(t)| is conserved")
def check_flow_modulus(run: SuiteContext) -> Outcome:
    paths = _trajectories(run)
    return Outcome(max(path.modulus_drift for path in paths.values()), run.tol.modulus)


@register_check("flow_energy", "the Hamilton function is conserved along the flow")
def check_flow_energy(run: SuiteContext) -> Outcome:
    paths = _trajectories(run)
    return Outcome(max(path.energy_drift for path in paths.values()), run.tol.flow)


@register_check("nonpolynomial_algebra", "{P-, P+} is not a polynomial in P0 for p >= 1")
def check_nonpolynomial(run: SuiteContext) -> Outcome:
    floor = run.cfg.verify.nonpolynomial_floor
    if run.params.p == 0:
        return Outcome(0.0, floor, lower_bound=True, skip="p = 0: the bracket is a cubic in P0")
    residual = nonpolynomial_residual(run.params, run.cfg.verify.sample_points, run.cfg.verify.seed)
    return Outcome(residual, floor, "cubic fit residual", lower_bound=True)
