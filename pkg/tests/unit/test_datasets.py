import json

import numpy as np
import pandas as pd
import pytest

from src.core.errors import UsageError
from src.core.models import System
from src.services.datasets import EmitRequest, build_dataset, dataset_kinds, render, write_dataset


def test_all_kinds_are_registered():
    assert set(dataset_kinds()) >= {"potential", "eigen", "measure", "curvature", "trajectory", "kernel",
                                    "metric", "symbols"}


def test_potential_rows_and_columns(params):
    frame = build_dataset("potential", EmitRequest(params=params, lo=0.1, hi=10.0, points=500))
    assert len(frame) == 500
    assert list(frame.columns) == ["x", "V0", "Vp", "Ap"]
    np.testing.assert_allclose(frame["Vp"] - frame["V0"], frame["Ap"], rtol=1e-12, atol=1e-12)


def test_initial_curvature_column_is_constant(params):
    frame = build_dataset("curvature", EmitRequest(params=params, points=20, system=System.INITIAL))
    np.testing.assert_allclose(frame["K_initial"], -2 / params.k, atol=1e-6)


def test_trajectory_closes_after_one_period(params):
    frame = build_dataset("trajectory", EmitRequest(params=params, system=System.TRANSFORMED, t_end=2 * np.pi))
    first, last = frame.iloc[0], frame.iloc[-1]
    assert abs(complex(first["re"], first["im"]) - complex(last["re"], last["im"])) < 1e-8


def test_eigen_dataset_columns(params):
    frame = build_dataset("eigen", EmitRequest(params=params, points=50, n_max=2))
    assert list(frame.columns) == ["x", "psi_0", "psi_1", "psi_2", "phi_0", "phi_1", "phi_2"]


def test_unknown_kind_and_bad_range(params):
    with pytest.raises(UsageError):
        build_dataset("spectrogram", EmitRequest(params=params))
    with pytest.raises(UsageError):
        build_dataset("metric", EmitRequest(params=params, lo=0.5, hi=0.1))


def test_json_rows_share_csv_keys():
    frame = pd.DataFrame({"s": [0.0, 0.5], "g0": [2.5, 10.0]})
    rows = json.loads(render(frame, "json"))
    assert rows == [{"s": 0.0, "g0": 2.5}, {"s": 0.5, "g0": 10.0}]
    assert render(frame, "csv").splitlines()[0] == "s,g0"


def test_unwritable_output_raises(tmp_path):
    frame = pd.DataFrame({"x": [1.0]})
    with pytest.raises(OSError):
        write_dataset(frame, "csv", tmp_path / "missing" / "out.csv")


def test_json_floats_keep_17_digits():
    text = render(pd.DataFrame({"x": [0.1], "n": [3]}), "json")
    assert "0.10000000000000001" in text
    assert json.loads(text) == [{"x": 0.1, "n": 3}]
