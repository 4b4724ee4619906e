from __future__ import annotations

from pathlib import Path

from app.shared.errors import AnalysisError


class OutputNotWritableError(AnalysisError):
    default_code = "OUTPUT_NOT_WRITABLE"

    def __init__(self, path: Path, reason: str) -> None:
        super().__init__(details=[{"path": str(path), "reason": reason}])
        self.path = path
