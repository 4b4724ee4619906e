"""Error envelope printed by the CLI on stdout and written to ``error.json``.

  {
    "error": {
      "code": "EL_INFEASIBLE",
      "message": "German user-facing message",
      "type": "error" | "warning" | "info",
      "exitCode": 1,
      "traceId": "hex-uuid",
      "timestamp": "2026-01-01T00:00:00Z",
      "details": [...],   # only when present
      "dev": {...}        # only when present
    }
  }
"""

from datetime import UTC, datetime
from typing import Any, Literal
from uuid import uuid4

from pydantic import BaseModel, ConfigDict, Field

from .registry import get_error_or_default

Severity = Literal["error", "warning", "info"]


class ErrorPayload(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    code: str
    message: str
    type: Severity = "error"
    exitCode: int = Field(default=1, ge=1)
    traceId: str
    timestamp: str
    details: list[dict[str, Any]] | None = None
    dev: dict[str, Any] | None = None


class ErrorEnvelope(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    error: ErrorPayload


def _timestamp() -> str:
    return datetime.now(UTC).isoformat(timespec="seconds").replace("+00:00", "Z")


def build_error_response(
    code: str,
    *,
    message: str | None = None,
    type: Severity | None = None,
    exit_code: int | None = None,
    details: list[dict[str, Any]] | None = None,
    dev: dict[str, Any] | None = None,
) -> dict[str, Any]:
    """Envelope for *code*; registry defaults unless overridden, empty details/dev omitted."""
    entry = get_error_or_default(code)
    payload: dict[str, Any] = {
        "code": code,
        "message": message if message is not None else entry.message,
        "type": type if type is not None else entry.type,
        "exitCode": exit_code if exit_code is not None else entry.exit_code,
        "traceId": uuid4().hex,
        "timestamp": _timestamp(),
    }
    if details:
        payload["details"] = details
    if dev:
        payload["dev"] = dev
    return ErrorEnvelope.model_validate({"error": payload}).model_dump(exclude_unset=True)


__all__ = ["ErrorEnvelope", "ErrorPayload", "Severity", "build_error_response"]
