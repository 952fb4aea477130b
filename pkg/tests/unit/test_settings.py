from src.config.settings import Settings, load_settings


def test_yaml_overlay_populates_sections():
    cfg = load_settings()
    assert cfg.tolerances.check == 1e-6
    assert cfg.quadrature.angular_nodes >= 64
    assert "logging" in cfg.config_yaml


def test_overrides_leave_the_original_untouched():
    cfg = load_settings()
    tuned = cfg.with_overrides(tol_coarse=1e-3, tol_fine=1e-5, grid_nodes=800)
    assert isinstance(tuned, Settings)
    assert tuned.tolerances.check == 1e-3
    assert tuned.tolerances.inner_product == 1e-5
    assert tuned.grid.gauss_nodes == tuned.grid.stencil_nodes == 800
    assert cfg.tolerances.check == 1e-6
    assert cfg.grid.gauss_nodes == 2000
