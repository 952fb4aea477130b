from src.services.transformed_coherent.states import (
    N1z,
    coherent_energy_transformed,
    log_transformed_coeff,
    normalization_squared,
    phi_z,
    phi_z_norm,
    phi_z_series,
    shifted_energy_by_quadrature,
    transformed_coeff,
)
from src.services.transformed_coherent.measure import (
    beta_identity,
    beta_sum,
    measure_h,
    moment_identity,
    moment_rhs,
    resolution_check_transformed,
    resolution_matrix_transformed,
    zeta1,
    zeta1_series,
)
