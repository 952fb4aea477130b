from src.services.darboux.transform import (
    A_p,
    A_p_regular,
    L0,
    L0_prime,
    L0_closed_form,
    V_p,
    log_u_p,
    make_context,
    small_x_limit,
    u_p,
)
from src.services.darboux.operators import (
    L_psi_prime,
    apply_h1,
    apply_L,
    apply_L_dag,
    factorization_residual_initial,
    factorization_residual_transformed,
    intertwining_residual,
    inverse_residual,
    log_derivative_residual,
    normalization_by_quadrature,
    phi,
    phi_gram,
    phi_prime,
    phi_state,
    potential_difference_residual,
    transform_residual,
    transformed_eigen_residual,
)
from src.services.darboux.algebra import (
    commutator_polynomial,
    ladder_matrix_elements,
    nonlinear_commutator_check,
    raising_element,
)
