from __future__ import annotations

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

from app.config import ProfileFormat
from app.core.core_messages import MessageKeys, msg

logger = logging.getLogger("app_logger")

_EXTENSIONS = {
    ProfileFormat.HTML: "html",
    ProfileFormat.SPEEDSCOPE: "speedscope.json",
}


@contextmanager
def profile_run(enabled: bool, out_dir: Path, fmt: ProfileFormat = ProfileFormat.HTML) -> Iterator[Path | None]:
    """Profile the enclosed block with pyinstrument and write ``profile.<ext>`` to *out_dir*.

    Yields the target path, or None when profiling is off.
    """
    if not enabled:
        yield None
        return

    from pyinstrument import Profiler
    from pyinstrument.renderers.html import HTMLRenderer
    from pyinstrument.renderers.speedscope import SpeedscopeRenderer

    renderer = HTMLRenderer() if fmt is ProfileFormat.HTML else SpeedscopeRenderer()
    out_path = out_dir / f"profile.{_EXTENSIONS[fmt]}"
    profiler = Profiler(interval=0.001)
    profiler.start()
    try:
        yield out_path
    finally:
        profiler.stop()
        out_path.write_text(profiler.output(renderer=renderer), encoding="utf-8")
        logger.info(msg.get(MessageKeys.CLI_PROFILE_WRITTEN, path=out_path))
