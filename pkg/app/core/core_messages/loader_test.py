from __future__ import annotations

import json
import logging
from collections.abc import Iterator
from pathlib import Path

import pytest

from app.core.core_messages import msg
from app.core.core_messages.loader import ImproperlyConfiguredError, MessageService


def _write_json(path: Path, payload: dict[str, object]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload), encoding="utf-8")


@pytest.fixture
def app_log(caplog: pytest.LogCaptureFixture) -> Iterator[pytest.LogCaptureFixture]:
    logger = logging.getLogger("app_logger")
    logger.addHandler(caplog.handler)
    try:
        yield caplog
    finally:
        logger.removeHandler(caplog.handler)


def test_message_service_merges_multiple_sources(tmp_path: Path) -> None:
    core_file = tmp_path / "core" / "messages.de.json"
    service_file = tmp_path / "service" / "messages.de.json"
    _write_json(core_file, {"cli": {"analysis_done": "fertig"}})
    _write_json(service_file, {"scoring": {"zero_mass": "Masse 0"}})

    service = MessageService(language="de", message_files=[core_file, service_file])

    assert service.get("cli.analysis_done") == "fertig"
    assert service.get("scoring.zero_mass") == "Masse 0"
    assert service.get(service.keys.SCORING_ZERO_MASS) == "Masse 0"


def test_message_service_returns_key_and_logs_warning_for_missing_key(
    app_log: pytest.LogCaptureFixture, tmp_path: Path
) -> None:
    core_file = tmp_path / "core" / "messages.de.json"
    _write_json(core_file, {"cli": {"analysis_done": "fertig"}})

    service = MessageService(language="de", message_files=[core_file])

    with app_log.at_level("WARNING", logger="app_logger"):
        result = service.get("missing.key")

    assert result == "missing.key"
    assert "Missing message key: missing.key" in app_log.text


def test_message_service_raises_for_duplicate_key(tmp_path: Path) -> None:
    core_file = tmp_path / "core" / "messages.de.json"
    service_file = tmp_path / "service" / "messages.de.json"
    _write_json(core_file, {"cli": {"analysis_done": "fertig"}})
    _write_json(service_file, {"cli": {"analysis_done": "anders"}})

    with pytest.raises(ImproperlyConfiguredError, match="Duplicate message key 'cli.analysis_done'"):
        MessageService(language="de", message_files=[core_file, service_file])


def test_message_service_interpolates_values(tmp_path: Path) -> None:
    core_file = tmp_path / "core" / "messages.de.json"
    _write_json(core_file, {"cli": {"config_loaded": "Konfiguration '{path}' geladen"}})

    service = MessageService(language="de", message_files=[core_file])

    assert service.get("cli.config_loaded", path="a.json") == "Konfiguration 'a.json' geladen"


def test_normalize_language_reduces_locale_tags() -> None:
    assert MessageService.normalize_language("en_US") == "en"
    assert MessageService.normalize_language("de-DE") == "de"
    assert MessageService.normalize_language("  ") is None


def test_bundled_catalogs_have_the_same_keys() -> None:
    assert msg.missing_keys("en") == []
    assert MessageService(language="en").missing_keys("de") == []
    assert msg.get("cli.analysis_done", lang="en", command="update") == "Analysis 'update' finished"


def test_missing_translation_falls_back_to_default_language(tmp_path: Path) -> None:
    core_file = tmp_path / "core" / "messages.de.json"
    _write_json(core_file, {"cli": {"analysis_done": "fertig"}})
    service = MessageService(language="de", message_files=[core_file])
    assert service.get("cli.analysis_done", lang="fr") == "fertig"


def test_non_string_leaf_is_rejected(tmp_path: Path) -> None:
    core_file = tmp_path / "core" / "messages.de.json"
    _write_json(core_file, {"cli": {"retries": 3}})
    with pytest.raises(ImproperlyConfiguredError, match="must resolve to a string"):
        MessageService(language="de", message_files=[core_file])


def test_missing_file_is_reported(tmp_path: Path) -> None:
    with pytest.raises(ImproperlyConfiguredError, match="not found"):
        MessageService(language="de", message_files=[tmp_path / "messages.de.json"])


def test_service_catalogs_are_discovered() -> None:
    assert "−∞" in msg.get("scoring.zero_mass", y=2.0, step=3)
    assert msg.get("calibration.grid_fallback", lang="en", loss="check").startswith("Loss 'check'")
