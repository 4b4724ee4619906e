from __future__ import annotations

from app.shared.errors import AnalysisError


class InvalidDivergenceError(AnalysisError):
    default_code = "INVALID_DIVERGENCE"

    def __init__(self, name: str, reason: str) -> None:
        super().__init__(details=[{"divergence": name, "reason": reason}])
        self.name = name
