from src.services.geometry.kahler import (
    curvature,
    f0,
    f1,
    g0,
    g1,
    kahler_structure,
    metric,
    metric_from_potential,
)
from src.services.geometry.symbols import (
    SYMBOLS,
    coordinate,
    poisson,
    polynomial_observable,
    product,
    sample_points,
    symbol,
    symbol_observable,
    symbol_series,
)
from src.services.geometry.flow import (
    DEFAULT_HAMILTONIAN,
    exact_flow,
    hamilton_flow,
    nonpolynomial_residual,
)
