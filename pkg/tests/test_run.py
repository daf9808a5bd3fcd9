from propagator.matrices import identity_kernel
from scenario.config import ScenarioConfig
from scenario.io import kernel_rows, write_json
from scenario.run import run_scenario
from zigzag_run import main
import numpy as np
import json
import pytest


def _run(tmp_path, *flags):
    return main(["--out", str(tmp_path), "--no-progress", *flags])


def _report(tmp_path):
    return json.loads(tmp_path.joinpath("report.json").read_text())


def test_analytic_scenario(tmp_path):
    assert _run(tmp_path) == 0
    report = _report(tmp_path)
    assert report["passed"]
    equivalence = report["equivalence"]
    assert equivalence["relative_difference"] <= 1e-10
    assert equivalence["delta_report"]["is_delta_like"]
    assert abs(equivalence["measured_delta_phase"]["phase"]) <= 1e-6
    assert equivalence["delta_report"]["i_factor_offset"] == pytest.approx(np.pi / 2, abs=1e-6)
    assert report["config"]["times"] == {"t_a": 0.0, "t_d": 1.0, "t_c": 2.0, "t_f": 3.0}
    assert set(report["versions"]) == {"python", "numpy", "scipy"}

    lines = tmp_path.joinpath("kernels.csv").read_text().splitlines()
    assert lines[0] == "q_out,q_in,re_zigzag,im_zigzag,re_direct,im_direct"
    assert len(lines) == 1 + 64 * 64
    rows = np.loadtxt(tmp_path.joinpath("kernels.csv"), delimiter=",", skiprows=1)
    np.testing.assert_allclose(rows[:, 2:4], rows[:, 4:6], rtol=0, atol=1e-10)
    assert tmp_path.joinpath("run.log").exists()


def test_grid_scenario(tmp_path):
    assert _run(tmp_path, "--mode", "grid") == 0
    equivalence = _report(tmp_path)["equivalence"]
    assert equivalence["relative_difference"] <= 2e-2
    assert equivalence["annihilation_deviation"] <= 1e-2
    assert equivalence["segment_slices"] == [1000, 1000, 1000, 2000]
    assert equivalence["nyquist_ratio"] == pytest.approx(0.8022, rel=1e-3)


def test_field_scenario(tmp_path):
    assert _run(tmp_path, "--mode", "field") == 0
    field = _report(tmp_path)["field"]
    assert len(field["per_mode"]) == 10
    assert field["product_consistency_error"] <= 1e-9
    assert not field["flagged"]
    assert tmp_path.joinpath("kernels.csv").exists()


def test_vacuous_field_fails(tmp_path):
    # Every mode has omega * (t_c - t_d) = pi on the turning segments
    flags = ("--mode", "field", "--mass", "0", "--p-max", str(np.pi), "--n-modes", "1",
             "--t-d", "1", "--t-c", "2", "--t-f", "3")
    assert _run(tmp_path, *flags) == 1
    field = _report(tmp_path)["field"]
    assert field["flagged"] and field["product_consistency_error"] is None


@pytest.mark.parametrize("mode", ("analytic", "grid"))
def test_negative_control_fails(tmp_path, mode):
    assert _run(tmp_path, "--mode", mode, "--negative-control") == 1
    report = _report(tmp_path)
    assert not report["passed"]
    assert report["equivalence"]["relative_difference"] >= 0.1


def test_nyquist_violation(tmp_path, capsys):
    assert _run(tmp_path, "--mode", "grid", "--slices", "100") == 3
    err = capsys.readouterr().err.strip().splitlines()
    assert len(err) == 1 and "ratio" in err[0]


def test_caustic(tmp_path, capsys):
    assert _run(tmp_path, "--omega", repr(np.pi)) == 3
    assert "caustic" in capsys.readouterr().err


@pytest.mark.parametrize("flags", (("--t-d", "2"), ("--t-d", "2.5"), ("--grid-n", "8"),
                                   ("--potential", "polynomial")))
def test_config_errors(tmp_path, capsys, flags):
    assert _run(tmp_path, *flags) == 2
    assert len(capsys.readouterr().err.strip().splitlines()) == 1


@pytest.mark.parametrize("content", (
    b'{"times": {"t_a": "zero"}}',
    b'{"times": {"t_a": null}}',
    b'{"potential": {"kind": "polynomial", "coefficients": 5}}',
    b"\xff\xfe{}",
))
def test_malformed_config_file(tmp_path, capsys, content):
    config = tmp_path.joinpath("scenario.json")
    config.write_bytes(content)
    assert _run(tmp_path, "--config", str(config)) == 2
    err = capsys.readouterr().err.strip().splitlines()
    assert len(err) == 1 and err[0].startswith("Configuration error")


def test_config_file(tmp_path):
    config = tmp_path.joinpath("scenario.json")
    config.write_text(json.dumps({"times": {"t_d": 2.0, "t_c": 2.0}}))
    assert _run(tmp_path, "--config", str(config)) == 2

    config.write_text(json.dumps({"potential": {"kind": "free"}, "seed": 3}))
    assert _run(tmp_path, "--config", str(config)) == 0
    report = _report(tmp_path)
    assert report["config"]["potential"]["kind"] == "free" and report["config"]["seed"] == 3

    # Flags take precedence over the file
    assert _run(tmp_path, "--config", str(config), "--seed", "4") == 0
    assert _report(tmp_path)["config"]["seed"] == 4


@pytest.mark.parametrize("mode", ("analytic", "field"))
def test_deterministic(tmp_path, mode):
    reports = []
    for _ in range(2):
        assert _run(tmp_path, "--mode", mode) == 0
        report = _report(tmp_path)
        report.pop("timestamp")
        reports.append(json.dumps(report, sort_keys=True))
    assert reports[0] == reports[1]


def test_plot(tmp_path):
    assert _run(tmp_path, "--plot") == 0
    assert tmp_path.joinpath("kernels.png").stat().st_size > 0


def test_run_scenario_directly(tmp_path):
    config = ScenarioConfig(output_dir=str(tmp_path), potential_kind="free")
    assert run_scenario(config, progress=False) == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == ["kernels.csv", "report.json",
                                                          "run.log"]


def test_failed_write_keeps_previous_report(tmp_path):
    path = tmp_path.joinpath("report.json")
    write_json(path, {"a": 1})
    with pytest.raises(ValueError):
        write_json(path, {"a": float("nan")})
    assert json.loads(path.read_text()) == {"a": 1}
    assert [p.name for p in tmp_path.iterdir()] == ["report.json"]


def test_kernel_rows(reference_grid):
    k = identity_kernel(reference_grid)
    rows = kernel_rows(k, k)
    assert rows.shape == (64 * 64, 6)
    assert rows[0, 0] == rows[0, 1] == -10.0
