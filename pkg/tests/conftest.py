import pytest
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.config.settings import settings
from src.services.darboux import make_context
from src.services.numerics import reference_grid, stencil_grid
from src.services.oscillator import make_params

# --- Parameter Fixtures ---

BARRIERS = [0.0, 0.5, 2.0, 6.0]


@pytest.fixture
def params():
    """The default working point b = 2 (k = 1.25), p = 1."""
    return make_params(2.0, 1)


@pytest.fixture
def params_free():
    """b = 0, p = 0: k = 3/4, the smallest Bargmann index."""
    return make_params(0.0, 0)


@pytest.fixture(params=BARRIERS, ids=lambda b: f"b={b:g}")
def barrier_params(request):
    return make_params(request.param, 1)


@pytest.fixture(params=[0, 1, 2, 3], ids=lambda p: f"p={p}")
def index_params(request):
    return make_params(0.5, request.param)


# --- Grid / Context Fixtures ---

@pytest.fixture
def small_grid():
    """Short uniform grid: cheap, and u_p stays far from overflow."""
    return stencil_grid(n=1200, x_max=6.0)


@pytest.fixture
def ctx(params):
    return make_context(params)


@pytest.fixture
def short_ctx(params, small_grid):
    return make_context(params, small_grid)


@pytest.fixture
def reference(params):
    return reference_grid(params, 6)


# --- Settings / IO ---

@pytest.fixture
def cfg():
    return settings


@pytest.fixture
def out_path(tmp_path):
    return tmp_path / "out.csv"
