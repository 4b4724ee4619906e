from __future__ import annotations

import datetime as dt

from app.core.core_logging.RunLogAdapter import run_logger


class RunJourney:
    """Collects the steps of one CLI run and logs them as a single JOURNEY record."""

    def __init__(self, command: str, config_path: str) -> None:
        self.command = command
        self.config_path = config_path
        self.steps: list[dict[str, object]] = []
        self.success = True
        self._logger = run_logger(command, config_path)

    def add_step(self, description: str, data: dict[str, object] | None = None) -> None:
        self.steps.append(
            {
                "step": description,
                "data": data or {},
                "timestamp": dt.datetime.now(dt.UTC).isoformat(),
            }
        )

    def set_failure(self, code: str | None = None) -> None:
        self.success = False
        if code is not None:
            self.add_step("failed", {"code": code})

    def log_journey(self) -> None:
        log = self._logger.info if self.success else self._logger.warning
        log("Run journey", extra={"success": self.success, "steps": self.steps})
