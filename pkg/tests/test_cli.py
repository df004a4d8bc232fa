import json
from pathlib import Path

import pytest

from ribbon_morph.cmd.main import cli_main
from ribbon_morph.config.config import get_config

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


@pytest.fixture(autouse=True)
def fresh_settings():
    get_config.cache_clear()
    yield
    get_config.cache_clear()


def _config(tmp_path: Path, text: str) -> str:
    path = tmp_path / "job.toml"
    path.write_text(text)
    return str(path)


def test_geometry_writes_mesh_and_report(tmp_path):
    code = cli_main([
        "geometry", "--config", str(CONFIGS / "cylindrical_helix.toml"),
        "--out", str(tmp_path), "--format", "obj", "--samples", "40x4", "--quiet",
    ])
    report = json.loads((tmp_path / "report.json").read_text())

    assert code == 0
    assert (tmp_path / "ribbon.obj").read_text().count("\nf ") == 2 * 39 * 3
    assert report["morphology"] == "cylindrical_helix"
    assert report["descriptors"]["radius"] == pytest.approx(1.0)
    assert report["outputs"] == [str(tmp_path / "ribbon.obj")]


def test_solve_laminate_rolls_a_ring(tmp_path):
    code = cli_main([
        "solve", "--config", str(CONFIGS / "biaxial_ring.toml"),
        "--out", str(tmp_path), "--samples", "20x4", "--quiet",
    ])
    report = json.loads((tmp_path / "report.json").read_text())

    assert code == 0
    assert report["morphology"] == "ring"
    assert report["solution"]["degenerate"] is True


def test_classify_prints_one_line(tmp_path, capsys):
    code = cli_main(["classify", "--config", str(CONFIGS / "purely_twisted.toml"), "--out", str(tmp_path)])
    line = json.loads(capsys.readouterr().out)

    assert code == 0
    assert line["morphology"] == "purely_twisted"
    assert line["chirality"] == -1
    assert not (tmp_path / "report.json").exists()


def test_classify_reports_residual_failure(monkeypatch, capsys):
    monkeypatch.setattr(
        "ribbon_morph.internal.usecase.geometry.geometric_residuals",
        lambda state, length: {"identity": 1.0},
    )
    code = cli_main(["classify", "--config", str(CONFIGS / "purely_twisted.toml")])

    assert code == 3
    assert json.loads(capsys.readouterr().out)["morphology"] == "purely_twisted"


def test_mesh_defaults_to_obj(tmp_path, capsys):
    job = _config(tmp_path, 'mode = "geometric"\n[geometry]\nkappa1 = 1.0\nkappa2 = 1.0\n[output]\nformats = ["csv"]\n')
    code = cli_main(["mesh", "--config", job, "--out", str(tmp_path / "m"), "--samples", "10x3"])

    assert code == 0
    assert capsys.readouterr().out.strip() == str(tmp_path / "m" / "ribbon.obj")


def test_sweep_writes_table(tmp_path):
    code = cli_main(["sweep", "--config", str(CONFIGS / "sweep_kappa2.toml"), "--out", str(tmp_path), "--quiet"])
    lines = (tmp_path / "sweep.csv").read_text().splitlines()

    assert code == 0
    assert len(lines) == 22
    assert lines[-1].startswith("20,1,ring,")


def test_sweep_streams_to_stdout(capsys):
    code = cli_main(["sweep", "--config", str(CONFIGS / "sweep_kappa2.toml"), "--out", "-", "--quiet"])
    out = capsys.readouterr().out

    assert code == 0
    assert out.startswith("i0,kappa2,morphology,")
    assert out.count("\r\n") == 22


def test_verify_passes(capsys):
    code = cli_main(["verify", "--cases", "1", "--tol", "1e-6"])
    results = [json.loads(line) for line in capsys.readouterr().out.splitlines()]

    assert code == 0
    assert {r["suite"] for r in results} == {"identity", "ode", "elasticity"}
    assert all(r["passed"] for r in results)


def test_verify_reports_residual_failure():
    assert cli_main(["verify", "--cases", "1", "--tol", "1e-30", "--quiet"]) == 3


@pytest.mark.parametrize("text", [
    'mode = "geometric"\n[geometry]\nkappa1 = 1.0\nkappa2 = 0.0\n[mechanics]\nthickness = 1.0\n',
    'mode = "geometric"\n[geometry]\nkappa1 = 1.0\n',
    'mode = "geometric"\n[geometry]\nkappa1 = 1.0\nkappa2 = 0.0\nextra = 2\n',
])
def test_invalid_job_exits_with_config_error(tmp_path, text):
    assert cli_main(["geometry", "--config", _config(tmp_path, text), "--out", str(tmp_path), "--quiet"]) == 2


def test_mode_mismatch(tmp_path):
    code = cli_main(["geometry", "--config", str(CONFIGS / "sweep_kappa2.toml"), "--out", str(tmp_path), "--quiet"])
    assert code == 2


def test_missing_config():
    assert cli_main(["solve", "--quiet"]) == 2


def test_bad_samples(tmp_path):
    code = cli_main([
        "geometry", "--config", str(CONFIGS / "cylindrical_helix.toml"),
        "--out", str(tmp_path), "--samples", "many", "--quiet",
    ])
    assert code == 2


def test_unwritable_output(tmp_path):
    blocker = tmp_path / "blocker"
    blocker.write_text("")
    code = cli_main([
        "geometry", "--config", str(CONFIGS / "cylindrical_helix.toml"),
        "--out", str(blocker / "out"), "--samples", "10x3", "--quiet",
    ])
    assert code == 1


@pytest.mark.parametrize("argv", [["render"], ["sweep", "--cases", "many"], []])
def test_usage_errors_return_config_status(argv):
    assert cli_main(argv) == 2


def test_help_returns_success(capsys):
    assert cli_main(["--help"]) == 0
    assert "ribbon-morph" in capsys.readouterr().out
