"""
Checks on the two quantum systems: eigenfunctions, the Darboux map and
the coherent states of both systems.
"""

import numpy as np

from src.core.errors import DomainError
from src.core.models import StateVector
from src.services.darboux import (
    A_p,
    A_p_regular,
    L0,
    L0_closed_form,
    factorization_residual_initial,
    factorization_residual_transformed,
    intertwining_residual,
    inverse_residual,
    log_derivative_residual,
    make_context,
    nonlinear_commutator_check,
    normalization_by_quadrature,
    phi_gram,
    potential_difference_residual,
    small_x_limit,
    transform_residual,
    transformed_eigen_residual,
)
from src.services.geometry import symbol
from src.services.numerics import stencil_grid, window_max
from src.services.oscillator import (
    area_convention,
    casimir_value,
    coherent_energy,
    coherent_grid,
    coherent_norm,
    coherent_psi,
    coherent_psi_minus_label,
    coherent_psi_series,
    eigen_residual,
    eigen_state,
    psi_table,
    resolution_element,
    resolution_matrix,
)
from src.services.specfun import laguerre_all
from src.services.transformed_coherent import (
    N1z,
    beta_identity,
    beta_sum,
    coherent_energy_transformed,
    moment_identity,
    phi_z,
    phi_z_norm,
    phi_z_series,
    resolution_matrix_transformed,
    shifted_energy_by_quadrature,
    zeta1,
    zeta1_series,
)
from src.services.verification.registry import Outcome, SuiteContext, register_check

# u_p grows like e^(x^2/4); checks on ln u_p and u_p itself use a short grid.
SHORT_X_MAX = 6.0
LARGE_X = 500.0
LARGE_X_TOL = 1e-3


def _short_context(run: SuiteContext):
    return make_context(run.params, stencil_grid(n=run.cfg.grid.stencil_nodes, x_max=SHORT_X_MAX))


def _relative(value: complex, expected: complex) -> float:
    return abs(value - expected) / max(abs(expected), 1e-300)


def _coherent_grid(run: SuiteContext, z: complex):
    return coherent_grid(run.params, z, total_nodes=run.cfg.grid.gauss_nodes, panels=run.cfg.grid.panels)


@register_check("parameters", "k = 1/2 + sqrt(1+4b)/4, alpha = -2(k+p) < 0 < E0, Casimir = 3/16 - b/4 = k(1-k)")
def check_parameters(run: SuiteContext) -> Outcome:
    q = run.params
    residual = max(abs(casimir_value(q) - q.k * (1 - q.k)), abs(q.alpha + 2 * (q.k + q.p)))
    if not q.alpha < 0 < q.E0:
        residual = float("inf")
    return Outcome(residual, run.tol.reduction)


@register_check("laguerre_recurrence", "(n+1)L_{n+1} - (2n+1+a-x)L_n + (n+a)L_{n-1} = 0, n <= 50, |x| <= 50")
def check_laguerre_recurrence(run: SuiteContext) -> Outcome:
    residual = 0.0
    for alpha in (0.5, 2 * run.params.k - 1, 10.0):
        for x in np.linspace(-50.0, 50.0, 21):
            table = laguerre_all(50, alpha, float(x))
            residual = max(residual, table.recurrence_residual("value" if x <= 0 else "terms"))
    return Outcome(residual, run.tol.reduction, "x > 0 scaled by the recurrence terms")


@register_check("orthonormality_initial", "<psi_m|psi_n> = delta_mn")
def check_orthonormality_initial(run: SuiteContext) -> Outcome:
    grid = run.reference
    table = psi_table(run.params, run.n_max, grid.nodes)
    gram = (table * grid.weights) @ table.T
    return Outcome(float(np.max(np.abs(gram - np.eye(run.n_max + 1)))), run.tol.inner_product,
                   f"m, n <= {run.n_max}")


@register_check("eigen_residual_initial", "h0 psi_n = (2n + 2k) psi_n")
def check_eigen_initial(run: SuiteContext) -> Outcome:
    grid = run.darboux.grid
    residual = max(eigen_residual(run.params, n, grid) for n in range(run.n_max + 1))
    return Outcome(residual, run.tol.check, f"stencil, x >= {run.cfg.grid.residual_x_min}")


@register_check("coherent_normalization", "<psi_z|psi_z> = 1")
def check_coherent_normalization(run: SuiteContext) -> Outcome:
    residual = max(abs(coherent_norm(run.params, z, _coherent_grid(run, z)) - 1.0) for z in run.polar_sample)
    return Outcome(residual, run.tol.inner_product, "5 x 5 polar sample, |z| <= 0.9")


@register_check("coherent_series", "psi_z = N0 sum a_n z^n psi_n")
def check_coherent_series(run: SuiteContext) -> Outcome:
    x = np.array([0.5, 1.3, 3.0])
    residual = max(float(np.max(np.abs(coherent_psi_series(run.params, z, x) - coherent_psi(run.params, z, x))))
                   for z in (0.6, 0.5 + 0.2j, -0.4 + 0.3j))
    return Outcome(residual, run.tol.inner_product)


@register_check("coherent_label_sign", "closed form of psi_z")
def check_coherent_label(run: SuiteContext) -> Outcome:
    x = np.array([0.7, 1.3, 2.5])
    residual = max(float(np.max(np.abs(coherent_psi(run.params, z, x) - coherent_psi_minus_label(run.params, -z, x))))
                   for z in run.polar_sample)
    run.conventions["coherent_label_sign"] = (
        "psi_z follows the coefficient series; the (1-z)^(-2k) closed form is the state at label -z")
    return Outcome(residual, run.tol.identity)


@register_check("resolution_initial", "int |z><z| dmu = 1, dmu = (2k-1)/pi (1-|z|^2)^-2 d^2z")
def check_resolution_initial(run: SuiteContext) -> Outcome:
    size = min(run.n_max, 8)
    spec = run.radial_spec(run.tol.inner_product)
    matrix = resolution_matrix(run.params, size, spec)
    e00 = resolution_element(run.params, 0, 0, spec, full_disk=True).value.real
    e01 = abs(resolution_element(run.params, 0, 1, spec, full_disk=True).value)
    run.conventions["measure_area_element"] = area_convention(e00)
    residual = max(float(np.max(np.abs(matrix - np.eye(size + 1)))), abs(e00 - 1.0), e01)
    return Outcome(residual, run.tol.check, f"indices <= {size}; (0,0) on the full disk = {e00!r}")


@register_check("coherent_energy_initial", "<psi_z|h0|psi_z> = 2 K0")
def check_coherent_energy(run: SuiteContext) -> Outcome:
    residual = 0.0
    for z in (0.5 + 0.2j, -0.3 + 0.6j):
        value = coherent_energy(run.params, z, _coherent_grid(run, z))
        residual = max(residual, _relative(value, 2 * symbol(run.params, "K0", z)))
    return Outcome(residual, run.tol.check)


@register_check("log_derivative_sign", "L0 = u'/u")
def check_l0_sign(run: SuiteContext) -> Outcome:
    ctx = _short_context(run)
    x = ctx.grid.nodes
    stencil = log_derivative_residual(ctx)
    mirror = window_max(x, (L0(ctx, x) + L0_closed_form(ctx, x)) / np.maximum(1.0, np.abs(L0(ctx, x))))
    run.conventions["L0_sign"] = (
        "L0 = +u'/u; the closed form (1-4k)/(2x) - x/2 - x L_{p-1}/L_p is -u'/u and is negated")
    return Outcome(max(stencil, mirror), run.tol.check)


@register_check("transformation_function", "h0 u_p = alpha u_p, u_p nodeless")
def check_transformation_function(run: SuiteContext) -> Outcome:
    return Outcome(transform_residual(_short_context(run)), run.tol.check,
                   f"relative, interior of (0, {SHORT_X_MAX}]")


@register_check("potential_difference", "A_p = -2 (ln u_p)''")
def check_potential_difference(run: SuiteContext) -> Outcome:
    residual = potential_difference_residual(_short_context(run))
    if not np.all(np.isfinite(A_p(run.darboux, run.darboux.grid.nodes))):
        residual = float("inf")
    return Outcome(residual, run.tol.check)


@register_check("potential_limit_origin", "A_p - (4k-1)/x^2 -> -1 - p/k as x -> 0")
def check_potential_origin(run: SuiteContext) -> Outcome:
    ctx = run.darboux
    measured, limit = small_x_limit(ctx)
    residual = abs(measured - limit)
    detail = ""
    if run.params.b == 0.0:
        # V_p - 2/x^2 -> -1 - 4p/3
        x = np.asarray([1e-4])
        v_reg = float((x**2 / 4 + A_p_regular(ctx, x))[0])
        residual = max(residual, abs(v_reg - (-1.0 - 4.0 * run.params.p / 3.0)))
        detail = "b = 0 law included"
    return Outcome(residual, run.tol.check, detail)


@register_check("potential_limit_infinity", "A_p -> -1 as x -> infinity")
def check_potential_infinity(run: SuiteContext) -> Outcome:
    # the leading correction is (4k - 1 + 4p)/x^2
    x = np.asarray([LARGE_X])
    return Outcome(abs(float(A_p(run.darboux, x)[0]) + 1.0), LARGE_X_TOL, f"x = {LARGE_X}")


@register_check("isospectrality", "h1 phi_n = (2n + 2k) phi_n")
def check_isospectrality(run: SuiteContext) -> Outcome:
    residual = max(transformed_eigen_residual(run.darboux, n) for n in range(run.n_max + 1))
    return Outcome(residual, run.tol.factorization)


@register_check("factorization_initial", "L+ L = h0 - alpha")
def check_factorization_initial(run: SuiteContext) -> Outcome:
    residual = max(factorization_residual_initial(run.darboux, n) for n in range(min(run.n_max, 8) + 1))
    return Outcome(residual, run.tol.factorization)


@register_check("factorization_transformed", "L L+ = h1 - alpha")
def check_factorization_transformed(run: SuiteContext) -> Outcome:
    residual = max(factorization_residual_transformed(run.darboux, n) for n in range(min(run.n_max, 8) + 1))
    return Outcome(residual, run.tol.factorization)


@register_check("intertwining", "L h0 = h1 L")
def check_intertwining(run: SuiteContext) -> Outcome:
    ctx = run.darboux
    states = [eigen_state(run.params, n, ctx.grid) for n in range(min(run.n_max, 8) + 1)]
    mixed = StateVector(ctx.grid, states[0].values + states[1].values,
                        states[0].derivative + states[1].derivative) if len(states) > 1 else states[0]
    residual = max(intertwining_residual(ctx, s) for s in states + [mixed])
    return Outcome(residual, run.tol.factorization)


@register_check("inverse_transformation", "psi_n = N_n L+ phi_n")
def check_inverse(run: SuiteContext) -> Outcome:
    residual = max(inverse_residual(run.darboux, n) for n in range(run.n_max + 1))
    return Outcome(residual, run.tol.check)


@register_check("normalization_constant", "<phi_n|h1 - alpha|phi_n> = 2p + 4k + 2n")
def check_normalization_constant(run: SuiteContext) -> Outcome:
    q = run.params
    residual = max(
        _relative(normalization_by_quadrature(run.darboux, n, run.reference), 2 * q.p + 4 * q.k + 2 * n)
        for n in range(run.n_max + 1))
    return Outcome(residual, run.tol.check, "relative")


@register_check("orthonormality_transformed", "<phi_m|phi_n> = delta_mn")
def check_orthonormality_transformed(run: SuiteContext) -> Outcome:
    gram = phi_gram(run.darboux, run.n_max, run.reference)
    return Outcome(float(np.max(np.abs(gram - np.eye(run.n_max + 1)))), run.tol.inner_product)


@register_check("commutator_identity", "[p-, p+] = 2(2k(1-k) - p0 alpha + 4 p0^2)(2 p0 - alpha)")
def check_commutator(run: SuiteContext) -> Outcome:
    residual = 0.0
    for n in range(21):
        lhs, rhs = nonlinear_commutator_check(run.darboux, n)
        residual = max(residual, _relative(lhs, rhs))
    return Outcome(residual, run.tol.commutator, "relative, n <= 20")


@register_check("n1z_factorization", "N1z^-2 = <psi_z|h0 - alpha|psi_z>")
def check_n1z(run: SuiteContext) -> Outcome:
    residual = 0.0
    for z in run.polar_sample[::3]:
        expected = 1.0 / float(N1z(run.params, abs(z) ** 2)) ** 2
        residual = max(residual, _relative(shifted_energy_by_quadrature(run.params, z, _coherent_grid(run, z)),
                                           expected))
    return Outcome(residual, run.tol.check, "relative")


@register_check("transformed_coherent_normalization", "<phi_z|phi_z> = 1")
def check_phi_z_norm(run: SuiteContext) -> Outcome:
    residual = max(abs(phi_z_norm(run.darboux, z, _coherent_grid(run, z)) - 1.0) for z in run.polar_sample)
    return Outcome(residual, run.tol.inner_product, "5 x 5 polar sample, |z| <= 0.9")


@register_check("transformed_coherent_series", "phi_z = N1z L psi_z = N sum b_n z^n phi_n")
def check_phi_z_series(run: SuiteContext) -> Outcome:
    x = np.array([0.7, 2.0, 3.5])
    residual = max(float(np.max(np.abs(phi_z_series(run.darboux, z, x) - phi_z(run.darboux, z, x))))
                   for z in (0.7, 0.4 - 0.3j))
    return Outcome(residual, run.tol.inner_product)


@register_check("transformed_coherent_energy", "<phi_z|h1|phi_z> = H1")
def check_phi_z_energy(run: SuiteContext) -> Outcome:
    residual = 0.0
    for z in (0.5, 0.3 + 0.4j):
        value = coherent_energy_transformed(run.darboux, z, _coherent_grid(run, z))
        residual = max(residual, _relative(value, symbol(run.params, "H1", z).real))
    return Outcome(residual, run.tol.check, "relative")


@register_check("moment_identity", "pi int h(s) s^n (1-s)^(2k+1)/(c-ps) ds = n! Gamma(2k)/(Gamma(n+2k)(n+c))")
def check_moments(run: SuiteContext) -> Outcome:
    # self-convergence target three decades below the moment rung
    spec = run.radial_spec(run.tol.moment * 1e-3)
    residual = 0.0
    for n in range(21):
        result, rhs = moment_identity(run.params, n, spec)
        residual = max(residual, _relative(result.value.real, rhs))
    return Outcome(residual, run.tol.moment, "relative, n <= 20")


@register_check("beta_identity", "sum_j C(p,j)(2k-1)/(c-j-1) B(n+j+1, c-j) = n! Gamma(2k)/((n+c) Gamma(n+2k))")
def check_beta(run: SuiteContext) -> Outcome:
    residual = 0.0
    for n in range(21):
        lhs, rhs = beta_identity(run.params, n)
        residual = max(residual, _relative(lhs, rhs))
    try:
        beta_sum(run.params, 0, first_shift=-1)
        variant = "is finite at n = 0"
    except DomainError:
        variant = "diverges at n = 0"
    run.conventions["beta_index"] = "B(n+j+1, 2k+p-j) from the term-by-term moment expansion; B(n+j-1, .) " + variant
    return Outcome(residual, run.tol.identity, "relative, n <= 20")


@register_check("resolution_transformed", "int |phi_z><phi_z| dnu = 1, dnu = h(|z|^2) d^2z")
def check_resolution_transformed(run: SuiteContext) -> Outcome:
    size = min(run.n_max, 8)
    matrix = resolution_matrix_transformed(run.params, size, run.radial_spec(run.tol.inner_product))
    return Outcome(float(np.max(np.abs(matrix - np.eye(size + 1)))), run.tol.check, f"indices <= {size}")


@register_check("zeta1_series", "zeta1 = N(zeta) sum b_n^2 (zeta z)^n")
def check_zeta1(run: SuiteContext) -> Outcome:
    q = run.params
    residual = 0.0
    for zeta, z in ((0.3 + 0.1j, 0.5), (0.5j, -0.4 + 0.2j), (0.7, 0.8)):
        series, _ = zeta1_series(q, zeta, z)
        residual = max(residual, _relative(series, zeta1(q, zeta, z)))
    run.conventions["zeta1_numerator_sign"] = "(2k + p - p zeta z) as the coefficient series gives"
    return Outcome(residual, run.tol.kernel, "relative")
