from __future__ import annotations

from app.shared.errors import AnalysisError


class TraceMismatchError(AnalysisError):
    default_code = "TRACE_MISMATCH"

    def __init__(self, left: tuple[str, int], right: tuple[str, int]) -> None:
        super().__init__(
            details=[{"rule_1": left[0], "length_1": left[1], "rule_0": right[0], "length_0": right[1]}],
        )
