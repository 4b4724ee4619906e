import json
from pathlib import Path

import pytest

from app.cli.main import main
from app.services.evidence.schemas import UpdateReport

CONFIGS = Path(__file__).resolve().parents[2] / "configs"

DEMOS = [
    ("update", "update_two_atom.json"),
    ("diagnose", "diagnose_gaussian_scale.json"),
    ("diagnose", "diagnose_gaussian.json"),
    ("variational", "variational_kl.json"),
    ("additivity", "additivity.json"),
    ("evidence-demo", "evidence_demo.json"),
    ("score", "score_bernoulli.json"),
    ("calibrate", "calibrate_squared.json"),
    ("quasi", "quasi_el_et.json"),
    ("vnm", "vnm.json"),
    ("recipe", "recipe_gaussian.json"),
]


def _run(command: str, config: Path, out: Path, *extra: str) -> int:
    return main([command, "--config", str(config), "--out", str(out), *extra])


@pytest.mark.parametrize(("command", "config"), DEMOS)
def test_demo_configs_run(command: str, config: str, tmp_path: Path) -> None:
    assert _run(command, CONFIGS / config, tmp_path) == 0
    report = json.loads((tmp_path / f"{command}_report.json").read_text(encoding="utf-8"))
    assert report["claim"]
    assert not (tmp_path / "error.json").exists()


def test_update_two_atom_demo(tmp_path: Path) -> None:
    assert _run("update", CONFIGS / "update_two_atom.json", tmp_path) == 0
    report = UpdateReport.model_validate_json((tmp_path / "update_report.json").read_text(encoding="utf-8"))
    (model,) = report.models
    assert [row.weight for row in model.posterior] == pytest.approx([0.75, 0.25])
    assert "not" in report.warning
    assert model.evidence.warning == report.warning
    posterior_csv = (tmp_path / "update_posterior.csv").read_bytes()
    assert posterior_csv.startswith(b"model_id,atom,label,prior,loss,posterior\n")
    assert b"\r\n" not in posterior_csv


def test_diagnose_scale_loss_is_decision_posterior(tmp_path: Path) -> None:
    assert _run("diagnose", CONFIGS / "diagnose_gaussian_scale.json", tmp_path) == 0
    report = json.loads((tmp_path / "diagnose_report.json").read_text(encoding="utf-8"))
    assert report["verdict"] == "decision-posterior"


def test_evidence_demo_unit_shift(tmp_path: Path) -> None:
    assert _run("evidence-demo", CONFIGS / "evidence_demo.json", tmp_path) == 0
    report = json.loads((tmp_path / "evidence-demo_report.json").read_text(encoding="utf-8"))
    assert report["change"] == pytest.approx(-1.0, abs=1e-9)
    assert report["predicted_change"] == pytest.approx(-1.0)
    assert report["tv_model_1"] <= 1e-12
    assert report["tv_model_0"] <= 1e-12
    assert all(record["warning"] == report["warning"] for record in report["records"])


@pytest.mark.parametrize(("command", "config"), [("score", "score_bernoulli.json"), ("calibrate", "calibrate_squared.json")])
def test_deterministic_reports_are_byte_identical(command: str, config: str, tmp_path: Path) -> None:
    first, second = tmp_path / "first", tmp_path / "second"
    assert _run(command, CONFIGS / config, first, "--deterministic", "--seed", "17") == 0
    assert _run(command, CONFIGS / config, second, "--deterministic", "--seed", "17") == 0
    produced = sorted(path.name for path in first.iterdir())
    assert produced == sorted(path.name for path in second.iterdir())
    for name in produced:
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_seed_override_changes_synthetic_data(tmp_path: Path) -> None:
    assert _run("calibrate", CONFIGS / "calibrate_squared.json", tmp_path / "a", "--seed", "1") == 0
    assert _run("calibrate", CONFIGS / "calibrate_squared.json", tmp_path / "b", "--seed", "2") == 0
    first = json.loads((tmp_path / "a" / "calibrate_report.json").read_text(encoding="utf-8"))
    second = json.loads((tmp_path / "b" / "calibrate_report.json").read_text(encoding="utf-8"))
    assert first["eta_hat"] != second["eta_hat"]


def test_missing_config_writes_error_envelope(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert _run("update", tmp_path / "missing.json", tmp_path) == 1
    envelope = json.loads(capsys.readouterr().out)
    assert envelope["error"]["code"] == "CONFIG_NOT_FOUND"
    assert json.loads((tmp_path / "error.json").read_text(encoding="utf-8"))["error"]["code"] == "CONFIG_NOT_FOUND"


def test_unknown_key_is_rejected(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"eta": 1.0, "update": {"losses": [0.0, 1.0]}, "temperature": 2}), encoding="utf-8")
    assert _run("update", config, tmp_path / "out") == 1
    envelope = json.loads(capsys.readouterr().out)
    assert envelope["error"]["code"] == "CONFIG_INVALID"
    assert any(detail["field"] == "temperature" for detail in envelope["error"]["details"])


def test_synthetic_data_needs_a_seed(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    config = tmp_path / "config.json"
    payload = {
        "model": {"grid": {"points": [0.0, 1.0]}, "loss": {"name": "squared"}},
        "data": {"source": "synthetic", "generator": "normal", "n": 10},
    }
    config.write_text(json.dumps(payload), encoding="utf-8")
    assert _run("update", config, tmp_path / "out") == 1
    assert json.loads(capsys.readouterr().out)["error"]["code"] == "CONFIG_INVALID"
    assert _run("update", config, tmp_path / "seeded", "--seed", "4") == 0


def test_module_error_exits_one(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    config = tmp_path / "config.json"
    payload = {
        "model": {"grid": {"points": [-1.0, 1.0]}, "loss": {"name": "check"}},
        "data": {"source": "inline", "values": [0.0, 1.0, 2.0]},
        "calibrate": {"method": "info-matching"},
    }
    config.write_text(json.dumps(payload), encoding="utf-8")
    assert _run("calibrate", config, tmp_path / "out") == 1
    assert json.loads(capsys.readouterr().out)["error"]["code"] == "MISSING_ORACLE"
    assert (tmp_path / "out" / "error.json").is_file()


def test_unknown_subcommand_is_an_argparse_error(tmp_path: Path) -> None:
    with pytest.raises(SystemExit) as info:
        main(["frobnicate", "--config", "x.json", "--out", str(tmp_path)])
    assert info.value.code == 2
