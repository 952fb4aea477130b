import yaml
from pydantic import BaseModel
from pydantic_settings import BaseSettings, SettingsConfigDict
from pathlib import Path
from typing import Any, Dict


class ToleranceSettings(BaseModel):
    """The single tolerance ladder every acceptance check reads from."""
    check: float = 1e-6            # stencil residuals, quadrature cross-checks
    inner_product: float = 1e-8    # <.|.> by quadrature
    identity: float = 1e-10        # special-function identities
    series: float = 1e-14          # adaptive truncation of coefficient series
    kernel: float = 1e-10          # Bergman kernel series vs closed form
    moment: float = 1e-9           # h(x) moment identity (relative)
    reduction: float = 1e-12       # p=0 analytic substitutions
    factorization: float = 1e-5    # L+L, LL+, intertwining, isospectrality
    bracket: float = 1e-7          # classical Poisson relations
    flow: float = 1e-8             # trajectory coincidence / periodicity
    modulus: float = 1e-9          # |z(t)| conservation
    commutator: float = 1e-9       # [p-,p+] matrix elements vs the cubic (relative)


class GridSettings(BaseModel):
    gauss_nodes: int = 2000
    panels: int = 40
    stencil_nodes: int = 2000
    stencil_x_max: float = 20.0
    residual_x_min: float = 0.5  # stencil residuals are read from here on
    tail_margin: float = 10.0


class QuadratureSettings(BaseModel):
    radial_nodes: int = 64
    max_doublings: int = 6
    angular_nodes: int = 64
    s_max: float = 1.0 - 1e-6
    series_cap: int = 400


class StencilSettings(BaseModel):
    max_step: float = 1e-4
    rim_fraction: float = 0.005
    wirtinger_fraction: float = 1e-3


class FlowSettings(BaseModel):
    dt: float = 1e-3
    t_end: float = 4.0 * 3.141592653589793


class VerifySettings(BaseModel):
    n_max: int = 10
    sample_points: int = 20
    seed: int = 20240518
    large_b: float = 1e4           # barrier used for the k -> infinity curvature limit
    curvature_bound: float = 0.05
    nonpolynomial_floor: float = 1e-3


class Settings(BaseSettings):
    # --- Application Metadata ---
    APP_NAME: str = "darboux-phase-space"
    APP_VERSION: str = "0.1.0"
    ENVIRONMENT: str = "development"

    BASE_DIR: Path = Path(__file__).resolve().parent.parent.parent

    # --- Type-Safe Configs ---
    tolerances: ToleranceSettings = ToleranceSettings()
    grid: GridSettings = GridSettings()
    quadrature: QuadratureSettings = QuadratureSettings()
    stencil: StencilSettings = StencilSettings()
    flow: FlowSettings = FlowSettings()
    verify: VerifySettings = VerifySettings()

    # Placeholder for YAML data
    config_yaml: Dict[str, Any] = {}

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="allow"
    )

    def with_overrides(
        self,
        tol_coarse: float | None = None,
        tol_fine: float | None = None,
        grid_nodes: int | None = None,
    ) -> "Settings":
        """Copy of these settings with CLI overrides applied; self is left untouched."""
        tolerances = self.tolerances
        if tol_coarse is not None:
            tolerances = tolerances.model_copy(update={"check": tol_coarse})
        if tol_fine is not None:
            tolerances = tolerances.model_copy(update={"inner_product": tol_fine})
        grid = self.grid
        if grid_nodes is not None:
            grid = grid.model_copy(update={"gauss_nodes": grid_nodes, "stencil_nodes": grid_nodes})
        return self.model_copy(update={"tolerances": tolerances, "grid": grid})


_SECTIONS: Dict[str, type[BaseModel]] = {
    "tolerances": ToleranceSettings,
    "grid": GridSettings,
    "quadrature": QuadratureSettings,
    "stencil": StencilSettings,
    "flow": FlowSettings,
    "verify": VerifySettings,
}


def load_settings() -> Settings:
    settings = Settings()

    config_path = settings.BASE_DIR / "src" / "config" / "settings.yaml"
    if config_path.exists():
        with open(config_path, "r", encoding="utf-8") as f:
            yaml_data = yaml.safe_load(f) or {}
            settings.config_yaml = yaml_data
            for name, model in _SECTIONS.items():
                if name in yaml_data:
                    setattr(settings, name, model(**yaml_data[name]))

    return settings

settings = load_settings()
