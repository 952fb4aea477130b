import math

from pydantic import BaseModel, ConfigDict, Field, computed_field


class ModelParams(BaseModel):
    """The (b, k, p, alpha) bundle that fixes both quantum systems.

    Build instances through `src.services.oscillator.make_params` (from the
    barrier strength b) or `ModelParams.from_bargmann_index` (from k
    directly, used for the k' = k + 1/2 comparison system).
    """
    model_config = ConfigDict(frozen=True)

    b: float = Field(..., ge=0.0, description="Barrier strength of b/x^2.")
    k: float = Field(..., ge=0.75, description="Bargmann index, k = 1/2 + sqrt(1+4b)/4.")
    p: int = Field(0, ge=0, description="Index of the transformation function u_p.")

    @computed_field
    @property
    def alpha(self) -> float:
        """Factorization energy alpha = -2(k+p)."""
        return -2.0 * (self.k + self.p)

    @property
    def E0(self) -> float:
        return 2.0 * self.k

    @property
    def hbar(self) -> float:
        """The classical Planck constant (2k)^-1 of the disk phase space."""
        return 1.0 / (2.0 * self.k)

    @property
    def c(self) -> float:
        """Shorthand 2k + p, the combination that recurs in every transformed formula."""
        return 2.0 * self.k + self.p

    @classmethod
    def from_bargmann_index(cls, k: float, p: int = 0) -> "ModelParams":
        b = ((4.0 * k - 2.0) ** 2 - 1.0) / 4.0
        return cls(b=max(b, 0.0), k=k, p=p)

    def shifted(self) -> "ModelParams":
        """The initial system at k' = k + 1/2, which the p = 0 transformed system reproduces."""
        return ModelParams.from_bargmann_index(self.k + 0.5, p=0)

    def describe(self) -> dict:
        return {"b": self.b, "k": self.k, "p": self.p, "alpha": self.alpha, "E0": self.E0, "hbar": self.hbar}


def bargmann_index(b: float) -> float:
    return 0.5 + 0.25 * math.sqrt(1.0 + 4.0 * b)
