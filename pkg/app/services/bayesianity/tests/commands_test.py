from pathlib import Path

import pytest

from app.core.core_extensions import CommandContext
from app.services.bayesianity.application import run_diagnose
from app.services.bayesianity.domain import NotBeliefPosteriorError
from app.services.bayesianity.schemas import DiagnoseReport
from app.shared.experiment import ConfigSemanticsError, ExperimentConfig


def _ctx(tmp_path: Path, payload: dict[str, object]) -> CommandContext:
    return CommandContext(config=ExperimentConfig.model_validate(payload), out_dir=tmp_path)


_GAUSSIAN = {
    "model": {"grid": {"points": [-1.0, 0.0, 1.0]}, "loss": {"name": "gaussian-loglik"}},
    "data": {"source": "inline", "values": [0.2, -0.4, 1.1]},
    "diagnose": {"sample_grid": {"start": -8, "stop": 8, "step": 0.01}, "extract": True},
}


class TestRunDiagnose:
    def test_gaussian_extraction_round_trip(self, tmp_path: Path) -> None:
        result = run_diagnose(_ctx(tmp_path, _GAUSSIAN))
        report = result.report
        assert isinstance(report, DiagnoseReport)
        assert report.verdict == "belief-posterior"
        assert report.extraction is not None
        assert report.extraction.round_trip_tv is not None and report.extraction.round_trip_tv <= 1e-10
        assert set(result.tables) == {"partition", "likelihood"}
        assert len(result.tables["likelihood"].rows) == 3 * 1601

    def test_scale_loss_refuses_extraction(self, tmp_path: Path) -> None:
        payload = {
            "model": {"grid": {"points": [1.0, 2.0]}, "loss": {"name": "gaussian-scale"}},
            "diagnose": {"sample_grid": {"start": -20, "stop": 20, "step": 0.01}, "extract": True},
        }
        with pytest.raises(NotBeliefPosteriorError):
            run_diagnose(_ctx(tmp_path, payload))

    def test_scale_loss_verdict_without_extraction(self, tmp_path: Path) -> None:
        payload = {
            "model": {"grid": {"points": [1.0, 2.0]}, "loss": {"name": "gaussian-scale"}},
            "diagnose": {"sample_grid": {"start": -20, "stop": 20, "step": 0.01}},
        }
        report = run_diagnose(_ctx(tmp_path, payload)).report
        assert isinstance(report, DiagnoseReport)
        assert report.verdict == "decision-posterior"
        assert report.atoms[1].A / report.atoms[0].A == pytest.approx(2.0, rel=0.01)

    def test_section_is_required(self, tmp_path: Path) -> None:
        with pytest.raises(ConfigSemanticsError):
            run_diagnose(_ctx(tmp_path, {"model": _GAUSSIAN["model"]}))
