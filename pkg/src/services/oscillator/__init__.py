from src.services.oscillator.spectrum import casimir_value, energy, ladder_initial, make_params
from src.services.oscillator.eigen import (
    apply_h0,
    eigen_residual,
    eigen_state,
    potential,
    psi,
    psi_prime,
    psi_second,
    psi_table,
    require_positive,
)
from src.services.oscillator.coherent import (
    area_convention,
    coherent_coeff,
    coherent_energy,
    coherent_grid,
    coherent_norm,
    coherent_psi,
    coherent_psi_minus_label,
    coherent_psi_series,
    coherent_term_size,
    log_coherent_coeff,
    measure_mu_weight,
    require_disk,
    resolution_element,
    resolution_matrix,
)
