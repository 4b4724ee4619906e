"""Tests for the pyinstrument run profiler."""

from __future__ import annotations

from pathlib import Path

import pytest

from app.config import ProfileFormat
from app.core.core_profiling import profile_run


class TestProfileRun:
    def test_disabled_yields_none_and_writes_nothing(self, tmp_path: Path) -> None:
        with profile_run(False, tmp_path) as target:
            assert target is None
        assert list(tmp_path.iterdir()) == []

    @pytest.mark.parametrize(
        ("fmt", "filename"),
        [(ProfileFormat.HTML, "profile.html"), (ProfileFormat.SPEEDSCOPE, "profile.speedscope.json")],
    )
    def test_enabled_writes_profile(self, tmp_path: Path, fmt: ProfileFormat, filename: str) -> None:
        pytest.importorskip("pyinstrument")
        with profile_run(True, tmp_path, fmt) as target:
            sum(i * i for i in range(10_000))
        assert target == tmp_path / filename
        assert target.is_file()
        assert target.stat().st_size > 0
