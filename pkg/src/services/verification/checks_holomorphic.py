"""Checks on the holomorphic disk representations of both systems."""

import numpy as np

from src.core.models import HoloSeries, System
from src.services.darboux import ladder_matrix_elements, nonlinear_commutator_check
from src.services.holomorphic import (
    apply_op_initial,
    apply_op_transformed,
    basis_coeff,
    bergman0,
    bergman0_series,
    bergman1,
    bergman1_series,
    coefficient_inner_product,
    coherent_overlap_initial,
    coherent_overlap_series,
    commutator,
    gram_matrix,
    inner_product_holo,
    monomial,
    compact_p_plus_factor,
    reproducing_check,
)
from src.services.oscillator import ladder_initial
from src.services.verification.registry import Outcome, SuiteContext, register_check

# deg 5 test function for the reproducing property and the inner products
TEST_COEFFS = np.array([1.0, 0.5j, -0.3, 0.2, 0.1j, -0.05], dtype=complex)
REPRODUCING_POINT = 0.4 + 0.3j


def _relative(value: complex, expected: complex) -> float:
    return abs(value - expected) / max(abs(expected), 1e-300)


@register_check("ladder_initial_holomorphic", "k0, k-, k+ on a_n z^n reproduce the su(1,1) matrix elements")
def check_ladder_initial(run: SuiteContext) -> Outcome:
    q = run.params
    residual = 0.0
    a = [basis_coeff(q, System.INITIAL, m) for m in range(run.n_max + 2)]
    for n in range(run.n_max + 1):
        k_plus, k_minus, k_zero = ladder_initial(q, n)
        state = monomial(q, System.INITIAL, n, a[n])
        up = apply_op_initial("k+", state).coeffs[n + 1]
        diag = apply_op_initial("k0", state).coeffs[n]
        residual = max(residual, _relative(up, k_plus * a[n + 1]), _relative(diag, k_zero * a[n]))
        if n:
            down = apply_op_initial("k-", state).coeffs[n - 1]
            residual = max(residual, _relative(down, k_minus * a[n - 1]))
        bracket = commutator(apply_op_initial, "k-", "k+", state)
        residual = max(residual, _relative(bracket[n], 2 * k_zero * a[n]))
    return Outcome(residual, run.tol.identity, "relative, includes [k-, k+] = 2 k0")


@register_check("commutator_holomorphic", "[p-, p+] on b_n z^n equals the matrix-element commutator")
def check_commutator_holomorphic(run: SuiteContext) -> Outcome:
    q = run.params
    residual = 0.0
    for n in range(21):
        state = monomial(q, System.TRANSFORMED, n)
        eigen = commutator(apply_op_transformed, "p-", "p+", state)[n].real
        lhs, _ = nonlinear_commutator_check(run.darboux, n)
        residual = max(residual, _relative(eigen, lhs))
    return Outcome(residual, run.tol.commutator, "relative, n <= 20")


@register_check("holomorphic_intertwining", "L k0 = p0 L and L+ L = 2(z d/dz + c)")
def check_holomorphic_intertwining(run: SuiteContext) -> Outcome:
    q = run.params
    residual = 0.0
    for n in range(31):
        state = monomial(q, System.INITIAL, n)
        left = apply_op_transformed("L", apply_op_initial("k0", state)).coeffs
        right = apply_op_transformed("p0", apply_op_transformed("L", state)).coeffs
        round_trip = apply_op_transformed("L+", apply_op_transformed("L", state)).coeffs[n]
        residual = max(residual, float(np.max(np.abs(left - right))) / max(1.0, float(np.max(np.abs(right)))),
                       _relative(round_trip, 2 * (n + q.c)))
    return Outcome(residual, run.tol.identity, "n <= 30")


@register_check("p_plus_holomorphic", "p+ z^n = 2(n+2k)(n+c+1) z^(n+1)")
def check_p_plus(run: SuiteContext) -> Outcome:
    q = run.params
    residual = 0.0
    mismatched = []
    for n in range(run.n_max + 1):
        b_n = basis_coeff(q, System.TRANSFORMED, n)
        b_up = basis_coeff(q, System.TRANSFORMED, n + 1)
        image = apply_op_transformed("p+", monomial(q, System.TRANSFORMED, n, b_n)).coeffs[n + 1]
        p_plus, _ = ladder_matrix_elements(run.darboux, n)
        residual = max(residual, _relative(image, p_plus * b_up))
        if abs(compact_p_plus_factor(q, n) - 2 * (n + 2 * q.k) * (n + q.c + 1)) > 1e-12 * (n + q.c) ** 2:
            mismatched.append(n)
    run.conventions["p_plus_holomorphic"] = (
        "z^n -> 2(n+2k)(n+c+1) z^(n+1) from the matrix elements; "
        f"2z^3 d^2/dz^2 + 2z(c+2)(z d/dz + 2k) disagrees at n in {mismatched}")
    return Outcome(residual, run.tol.identity, "relative")


@register_check("bergman_kernels", "sum a_n^2 (z conj w)^n and sum b_n^2 (z conj w)^n in closed form")
def check_bergman(run: SuiteContext) -> Outcome:
    q = run.params
    points = run.points
    residual = 0.0
    for z in points[:5]:
        for w in points[5:10]:
            t = complex(np.conj(w))
            residual = max(residual,
                           _relative(bergman0_series(q, z, t)[0], bergman0(q, z, t)),
                           _relative(bergman1_series(q, z, t)[0], bergman1(q, z, t)))
    return Outcome(residual, run.tol.kernel, "relative")


@register_check("coherent_overlap_initial", "zeta0 = (1 - |zeta|^2)^k (1 - zeta z)^(-2k) = N(zeta) sum a_n^2 (zeta z)^n")
def check_overlap(run: SuiteContext) -> Outcome:
    q = run.params
    residual = 0.0
    for zeta, z in zip(run.points[:6], run.points[6:12]):
        residual = max(residual, _relative(coherent_overlap_series(q, zeta, z)[0],
                                           coherent_overlap_initial(q, zeta, z)))
    return Outcome(residual, run.tol.kernel, "relative")


@register_check("reproducing_property", "<delta(., conj z0)|f> = f(z0)")
def check_reproducing(run: SuiteContext) -> Outcome:
    residual = 0.0
    for system in System:
        f = HoloSeries(TEST_COEFFS, system, run.params)
        value, expected = reproducing_check(run.params, system, f, REPRODUCING_POINT,
                                            run.radial_spec(run.tol.inner_product))
        residual = max(residual, abs(value - expected))
    return Outcome(residual, run.tol.check, f"z0 = {REPRODUCING_POINT}")


@register_check("inner_product_holomorphic", "disk quadrature agrees with the coefficient pairing")
def check_inner_products(run: SuiteContext) -> Outcome:
    residual = 0.0
    for system in System:
        first = HoloSeries(TEST_COEFFS, system, run.params)
        second = HoloSeries(np.conj(TEST_COEFFS[::-1]) + 0.25, system, run.params)
        for left, right in ((first, first), (first, second), (second, second)):
            quad = inner_product_holo(system, left, right, run.radial_spec(run.tol.inner_product)).value
            residual = max(residual, _relative(quad, coefficient_inner_product(system, left, right)))
    return Outcome(residual, run.tol.check, "relative")


@register_check("gram_transformed", "<phi_m(z)|phi_n(z)> = delta_mn")
def check_gram_transformed(run: SuiteContext) -> Outcome:
    size = min(run.n_max, 8)
    gram = gram_matrix(run.params, System.TRANSFORMED, size, run.radial_spec(run.tol.inner_product))
    run.gram_transformed = gram
    return Outcome(float(np.max(np.abs(gram - np.eye(size + 1)))), run.tol.check, f"indices <= {size}")
