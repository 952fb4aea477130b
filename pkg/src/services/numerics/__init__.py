from src.services.numerics.quadrature import (
    disk_integrate,
    disk_monomial_integral,
    disk_rule,
    halfline_integrate,
    jacobi_rule,
    legendre_panels,
    radial_integrate,
    reference_grid,
    radial_spec,
    reference_x_max,
    stencil_grid,
    uniform_grid,
)
from src.services.numerics.stencils import (
    d1_uniform,
    d2_uniform,
    radial_derivatives,
    rim_step,
    stencil_d1,
    stencil_d2,
    wirtinger,
    window_max,
)
from src.services.numerics.series import power_series, truncation_order

__all__ = [
    "disk_integrate",
    "disk_monomial_integral",
    "disk_rule",
    "halfline_integrate",
    "jacobi_rule",
    "legendre_panels",
    "radial_integrate",
    "reference_grid",
    "radial_spec",
    "reference_x_max",
    "stencil_grid",
    "uniform_grid",
    "d1_uniform",
    "d2_uniform",
    "radial_derivatives",
    "rim_step",
    "stencil_d1",
    "stencil_d2",
    "wirtinger",
    "window_max",
    "power_series",
    "truncation_order",
]
