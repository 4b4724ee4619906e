from pathlib import Path

import pytest

from app.core.core_extensions import CommandContext
from app.services.quasiposterior.application import moment_losses, run_quasi
from app.services.quasiposterior.schemas import QuasiReport
from app.shared.experiment import ConfigSemanticsError, ExperimentConfig, resolve_primary_model


def _ctx(tmp_path: Path, payload: dict[str, object]) -> CommandContext:
    return CommandContext(config=ExperimentConfig.model_validate(payload), out_dir=tmp_path)


_PAYLOAD: dict[str, object] = {
    "model": {"grid": {"points": [0.5, 0.6666666666666666, 2.0]}, "loss": {"name": "el-moment"}},
    "data": {"source": "inline", "values": [0.0, 1.0, 1.0]},
    "quasi": {"methods": ["el", "et"]},
}


class TestRunQuasi:
    def test_report_and_table(self, tmp_path: Path) -> None:
        result = run_quasi(_ctx(tmp_path, _PAYLOAD))
        report = result.report
        assert isinstance(report, QuasiReport)
        assert report.n == 3
        assert [m.method for m in report.methods] == ["el", "et"]
        el = report.methods[0]
        assert el.infeasible_atoms == [2]
        assert el.posterior[0].weight == pytest.approx(0.457627, abs=1e-6)
        assert el.posterior[2].weight == 0.0
        assert {c.name for c in report.conventions} == {"el-ratio-vs-product", "et-kl-vs-entropy"}
        assert all(c.tv <= 1e-12 for c in report.conventions)
        assert result.tables["atoms"].columns == (
            "atom",
            "label",
            "prior",
            "el_loss",
            "el_posterior",
            "et_loss",
            "et_posterior",
        )


class TestMomentLosses:
    def test_shift_goes_to_offset(self) -> None:
        payload = dict(_PAYLOAD)
        payload["model"] = {
            "grid": {"points": [0.5, 0.6666666666666666]},
            "loss": {"name": "el-moment", "shift": {"constant": 2.0}},
        }
        inputs = resolve_primary_model(ExperimentConfig.model_validate(payload))
        solved = moment_losses(inputs)
        assert solved.losses.offset == pytest.approx(6.0)
        assert solved.losses.values[0] == pytest.approx(0.169899, abs=1e-6)

    def test_plain_loss_is_rejected(self) -> None:
        payload = dict(_PAYLOAD)
        payload["model"] = {"grid": {"points": [0.5]}, "loss": {"name": "squared"}}
        inputs = resolve_primary_model(ExperimentConfig.model_validate(payload))
        with pytest.raises(ConfigSemanticsError):
            moment_losses(inputs)
