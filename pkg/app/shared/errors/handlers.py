"""Map exceptions raised during a CLI run onto error envelopes and exit codes."""

from typing import Any

from pydantic import ValidationError

from .builder import build_error_response
from .exceptions import AnalysisError


def validation_details(exc: ValidationError) -> list[dict[str, Any]]:
    details: list[dict[str, Any]] = []
    for issue in exc.errors():
        location = issue.get("loc", ())
        field = ".".join(str(part) for part in location)
        details.append(
            {
                "field": field or "config",
                "reason": str(issue.get("type", "validation_error")),
                "expected": str(issue.get("msg", "invalid value")),
            }
        )
    return details


def handle_exception(exc: BaseException) -> tuple[int, dict[str, Any]]:
    """Return ``(exit_code, envelope)`` for *exc*."""
    if isinstance(exc, AnalysisError):
        body = build_error_response(
            exc.code,
            message=exc.message,
            type=exc.error_type,
            exit_code=exc.exit_code,
            details=exc.details,
            dev=exc.dev,
        )
        return exc.exit_code, body

    if isinstance(exc, ValidationError):
        return 1, build_error_response("CONFIG_INVALID", details=validation_details(exc))

    body = build_error_response(
        "UNKNOWN_ERROR",
        dev={"exception": type(exc).__name__, "detail": str(exc)},
    )
    return 1, body


__all__ = ["handle_exception", "validation_details"]
