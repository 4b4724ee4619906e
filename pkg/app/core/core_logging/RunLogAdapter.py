from __future__ import annotations

import logging
from collections.abc import Mapping, MutableMapping


class RunLogAdapter(logging.LoggerAdapter[logging.Logger]):
    """Stamps ``log_type`` and the run's fields (command, config) on every record.

    Fields passed per call in ``extra`` win over the adapter's own.
    """

    def __init__(self, logger: logging.Logger, log_type: str, fields: Mapping[str, object] | None = None) -> None:
        super().__init__(logger, {"log_type": log_type, **(fields or {})})

    def process(
        self,
        msg: object,
        kwargs: MutableMapping[str, object],
    ) -> tuple[object, MutableMapping[str, object]]:
        raw_extra = kwargs.get("extra")
        per_call: dict[str, object] = raw_extra if isinstance(raw_extra, dict) else {}
        kwargs["extra"] = {**(self.extra or {}), **per_call}
        return msg, kwargs


def run_logger(command: str, config: str) -> RunLogAdapter:
    return RunLogAdapter(logging.getLogger("journey"), "JOURNEY", {"command": command, "config": config})
