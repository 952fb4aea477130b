import json

import pytest

from src.main import EXIT_FAILED, EXIT_IO, EXIT_OK, EXIT_USAGE, main

FAST_CHECKS = ["--check", "parameters", "--check", "moment_identity", "--check", "bergman_kernels"]


def test_verify_subset_passes(tmp_path):
    out = tmp_path / "report.json"
    code = main(["verify", "--b", "2", "--p", "1", "--n-max", "4", "--out", str(out)] + FAST_CHECKS)
    assert code == EXIT_OK
    report = json.loads(out.read_text(encoding="utf-8"))
    assert [c["name"] for c in report["checks"]] == ["parameters", "moment_identity", "bergman_kernels"]
    assert "L0_sign" in report["conventions"]


def test_verify_reports_are_byte_identical(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    for path in (first, second):
        assert main(["verify", "--n-max", "4", "--out", str(path)] + FAST_CHECKS) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_negative_barrier_is_a_usage_error():
    assert main(["verify", "--b", "-1"]) == EXIT_USAGE


def test_bad_flag_is_a_usage_error():
    assert main(["verify", "--colour", "red"]) == EXIT_USAGE


def test_unknown_check_is_a_usage_error():
    assert main(["verify", "--check", "no_such_check"]) == EXIT_USAGE


def test_impossible_tolerance_fails(capsys):
    code = main(["verify", "--tol-coarse", "1e-30", "--check", "eigen_residual_initial"])
    assert code == EXIT_FAILED
    report = json.loads(capsys.readouterr().out)
    assert report["checks"][0]["status"] == "fail"
    assert report["checks"][0]["residual"] > 0


def test_emit_potential_csv(out_path):
    code = main(["emit", "potential", "--b", "2", "--p", "1", "--range", "0.1", "10", "--points", "500",
                 "--out", str(out_path)])
    assert code == EXIT_OK
    lines = out_path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "x,V0,Vp,Ap"
    assert len(lines) == 501


def test_emit_json_to_stdout(capsys):
    assert main(["emit", "metric", "--format", "json", "--points", "5"]) == EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 5
    assert set(rows[0]) == {"s", "f0", "f1", "g0", "g1"}


def test_emit_trajectory_is_periodic(capsys):
    code = main(["emit", "trajectory", "--system", "initial", "--z0", "0.5,0", "--format", "json"])
    assert code == EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert abs(rows[0]["re"] - rows[-1]["re"]) < 1e-8
    assert abs(rows[0]["im"] - rows[-1]["im"]) < 1e-8


def test_emit_to_unwritable_path(tmp_path):
    target = tmp_path / "no" / "such" / "dir.csv"
    assert main(["emit", "measure", "--out", str(target)]) == EXIT_IO


def test_emit_unknown_kind():
    assert main(["emit", "spectrogram"]) == EXIT_USAGE


@pytest.mark.slow
def test_full_suite_passes(tmp_path):
    out = tmp_path / "full.json"
    assert main(["verify", "--b", "2", "--p", "1", "--n-max", "10", "--out", str(out)]) == EXIT_OK


@pytest.mark.parametrize("dt", ["0", "-0.01", "nan"])
def test_emit_trajectory_rejects_bad_step(tmp_path, dt):
    out = tmp_path / "trajectory.csv"
    assert main(["emit", "trajectory", "--out", str(out), "--dt", dt]) == EXIT_USAGE
    assert not out.exists()


def test_repeated_check_is_reported_once(capsys):
    assert main(["verify", "--n-max", "4", "--check", "parameters", "--check", "parameters"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert [c["name"] for c in report["checks"]] == ["parameters"]
