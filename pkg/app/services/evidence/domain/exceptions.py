from __future__ import annotations

from app.shared.errors import AnalysisError


class TemperatureMismatchError(AnalysisError):
    default_code = "TEMPERATURE_MISMATCH"

    def __init__(self, left: float, right: float) -> None:
        super().__init__(details=[{"eta_1": left, "eta_0": right}])
        self.left = left
        self.right = right


class InvalidEvidenceError(AnalysisError):
    default_code = "INVALID_EVIDENCE"

    def __init__(self, anchored_log_z: float) -> None:
        super().__init__(details=[{"anchored_log_Z": anchored_log_z}])
        self.anchored_log_z = anchored_log_z
