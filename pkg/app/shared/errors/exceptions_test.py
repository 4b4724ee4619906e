"""Tests for the AnalysisError exception."""

from app.shared.errors.exceptions import AnalysisError


class _EmptyDataset(AnalysisError):
    default_code = "EMPTY_DATASET"


class TestAnalysisError:
    def test_resolves_from_registry(self) -> None:
        exc = AnalysisError("TEMPERATURE_MISMATCH")
        assert exc.code == "TEMPERATURE_MISMATCH"
        assert exc.exit_code == 1
        assert exc.error_type == "error"
        assert exc.message  # non-empty from registry

    def test_overrides(self) -> None:
        exc = AnalysisError("EL_INFEASIBLE", message="Custom", type="error", exit_code=3)
        assert exc.message == "Custom"
        assert exc.error_type == "error"
        assert exc.exit_code == 3

    def test_subclass_default_code(self) -> None:
        exc = _EmptyDataset()
        assert exc.code == "EMPTY_DATASET"

    def test_loesung_becomes_dev_hint(self) -> None:
        exc = AnalysisError("NONFINITE_LOSS")
        assert exc.dev is not None
        assert "loesung" in exc.dev

    def test_details_and_dev(self) -> None:
        details = [{"atom": 1, "value": "inf"}]
        exc = AnalysisError("NONFINITE_LOSS", details=details, dev={"loesung": "x"})
        assert exc.details == details
        assert exc.dev == {"loesung": "x"}

    def test_unknown_code_uses_defaults(self) -> None:
        exc = AnalysisError("NONEXISTENT")
        assert exc.exit_code == 1
        assert exc.message

    def test_is_exception(self) -> None:
        exc = AnalysisError("GRID_MISMATCH")
        assert isinstance(exc, Exception)
        assert str(exc) == exc.message
