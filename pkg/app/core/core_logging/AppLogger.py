from __future__ import annotations

import json
import logging
import logging.config
import pathlib

from app.config import get_app_settings

app_logger = logging.getLogger("app_logger")

_CONFIG_FILE = pathlib.Path(__file__).parent / "logger_config_files/stderr_config.json"


def setup_logging(level: str | None = None) -> None:
    app_settings = get_app_settings()
    resolved_level = level or app_settings.LOG_LEVEL.value
    with _CONFIG_FILE.open() as f_in:
        logger_config = json.load(f_in)

    if "root" in logger_config:
        logger_config["root"]["level"] = resolved_level

    # Update any explicitly defined loggers
    for logger_name in ["app_logger", "journey"]:
        if logger_name in logger_config.get("loggers", {}):
            logger_config["loggers"][logger_name]["level"] = resolved_level

    # The formatter reads the timezone from its constructor kwargs
    for formatter in logger_config.get("formatters", {}).values():
        formatter["timezone"] = app_settings.LOG_TIMEZONE

    logging.config.dictConfig(logger_config)
    app_logger.debug("Logging configured with level: %s", resolved_level)


setup_logging()
