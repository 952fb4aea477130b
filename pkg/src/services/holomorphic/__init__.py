from src.services.holomorphic.operators import (
    INITIAL_OPS,
    TRANSFORMED_OPS,
    apply_op_initial,
    apply_op_transformed,
    commutator,
    monomial,
    compact_p_plus_factor,
)
from src.services.holomorphic.kernels import (
    bergman0,
    bergman0_series,
    bergman1,
    bergman1_series,
    coherent_overlap_initial,
    coherent_overlap_series,
)
from src.services.holomorphic.inner import (
    basis_coeff,
    coefficient_inner_product,
    gram_matrix,
    inner_product_holo,
    kernel_series,
    reproducing_check,
)
