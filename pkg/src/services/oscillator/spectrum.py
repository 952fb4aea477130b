import math

from src.core.errors import DomainError
from src.core.models import ModelParams
from src.core.models.params import bargmann_index


def make_params(b: float, p: int = 0) -> ModelParams:
    """Parameter bundle for h0 = -d^2/dx^2 + x^2/4 + b/x^2 and the transformation index p."""
    if b < 0 or not math.isfinite(b):
        raise DomainError(f"barrier strength must be finite and >= 0, got b={b}")
    if p < 0 or int(p) != p:
        raise DomainError(f"transformation index must be an integer >= 0, got p={p}")
    return ModelParams(b=float(b), k=bargmann_index(b), p=int(p))


def energy(params: ModelParams, n: int) -> float:
    """E_n = 2n + 2k; shared by both systems."""
    if n < 0:
        raise DomainError(f"level must be >= 0, got n={n}")
    return 2.0 * n + 2.0 * params.k


def casimir_value(params: ModelParams) -> float:
    """Casimir 3/16 - b/4, asserted equal to k(1-k)."""
    value = 3.0 / 16.0 - params.b / 4.0
    if abs(value - params.k * (1.0 - params.k)) > 1e-14 * max(1.0, abs(value)):
        raise DomainError(f"k={params.k} is inconsistent with b={params.b}")
    return value


def ladder_initial(params: ModelParams, n: int) -> tuple[float, float, float]:
    """su(1,1) matrix elements on |n>: (k+ to n+1, k- to n-1, k0 diagonal)."""
    if n < 0:
        raise DomainError(f"level must be >= 0, got n={n}")
    k = params.k
    return (
        -math.sqrt((n + 1) * (n + 2 * k)),
        -math.sqrt(n * (n + 2 * k - 1)),
        k + n,
    )
