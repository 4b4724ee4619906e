"""Unified analysis exception that all modules can raise.

AnalysisError resolves its fields from the error registry at construction
time, but allows per-instance overrides for message, type, details, etc.
The CLI error handler catches it and prints the standardized error envelope.
"""

from typing import Any, Literal

from .registry import get_error_or_default


class AnalysisError(Exception):
    """Base exception for all analysis errors across modules.

    Resolves defaults from the error registry; explicit kwargs override.

    Attributes:
        code: Machine-readable error code.
        message: German user-facing message.
        error_type: Severity shown to the user.
        exit_code: Process exit code returned by the CLI.
        details: Optional field-level or atom-level details.
        dev: Optional developer-only information.
    """

    default_code: str = "UNKNOWN_ERROR"

    def __init__(
        self,
        code: str | None = None,
        *,
        message: str | None = None,
        type: Literal["error", "warning", "info"] | None = None,
        exit_code: int | None = None,
        details: list[dict[str, Any]] | None = None,
        dev: dict[str, Any] | None = None,
    ) -> None:
        resolved_code = code if code is not None else self.default_code
        entry = get_error_or_default(resolved_code)

        self.code: str = resolved_code
        self.message: str = message if message is not None else entry.message
        self.error_type: Literal["error", "warning", "info"] = type if type is not None else entry.type
        self.exit_code: int = exit_code if exit_code is not None else entry.exit_code
        self.details: list[dict[str, Any]] | None = details
        self.dev: dict[str, Any] | None = dev
        if self.dev is None and entry.loesung:
            self.dev = {"loesung": entry.loesung}

        super().__init__(self.message)


__all__ = ["AnalysisError"]
