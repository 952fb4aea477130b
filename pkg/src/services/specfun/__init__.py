from src.services.specfun.special import (
    beta,
    binomial,
    laguerre,
    laguerre_all,
    laguerre_columns,
    log_beta,
    log_gamma,
)

__all__ = [
    "beta",
    "binomial",
    "laguerre",
    "laguerre_all",
    "laguerre_columns",
    "log_beta",
    "log_gamma",
]
