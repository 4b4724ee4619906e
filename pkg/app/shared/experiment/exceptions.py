from __future__ import annotations

from pathlib import Path

from app.shared.errors import AnalysisError


class ConfigNotFoundError(AnalysisError):
    default_code = "CONFIG_NOT_FOUND"

    def __init__(self, path: Path) -> None:
        super().__init__(details=[{"path": str(path)}])


class ConfigSemanticsError(AnalysisError):
    """Config passed schema validation but cannot drive the requested command."""

    default_code = "CONFIG_INVALID"

    def __init__(self, field: str, reason: str) -> None:
        super().__init__(details=[{"field": field, "reason": reason, "expected": None}])
