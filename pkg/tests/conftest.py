"""Global pytest configuration.

Pins the environment the settings and message catalogs read at import time, and
marks every collected test as ``unit``, ``integration`` or ``e2e`` from its path.
"""

from __future__ import annotations

import os
from pathlib import Path

import pytest

os.environ["MESSAGE_LANG"] = "de"
os.environ.setdefault("LOG_LEVEL", "WARNING")
os.environ["PROFILING_ENABLED"] = "false"
os.environ["DETERMINISTIC"] = "false"
os.environ["MAX_WORKERS"] = "1"

_SUITES = (("/tests/e2e/", "e2e"), ("/tests/integration/", "integration"))
_KINDS = ("unit", "integration", "e2e")


def _suite_for(path: str) -> str:
    for fragment, marker in _SUITES:
        if fragment in path:
            return marker
    return "unit"


def pytest_collection_modifyitems(items: list[pytest.Item]) -> None:
    for item in items:
        if any(item.get_closest_marker(kind) is not None for kind in _KINDS):
            continue
        item.add_marker(getattr(pytest.mark, _suite_for(Path(str(item.fspath)).as_posix())))
