"""Command-line entry point: ``gibbs-posteriors <command> --config <path> --out <dir>``.

Every registered service command is a subcommand. A run writes
``<command>_report.json`` plus ``<command>_<table>.csv`` into the output
directory; on failure it prints the error envelope, writes ``error.json``
and exits non-zero.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from app.config import get_app_settings
from app.core.core_extensions import CommandContext, CommandResult, CommandSpec, command_table, get_service_registrations
from app.core.core_logging.AppLogger import setup_logging
from app.core.core_logging.JourneyLogger import RunJourney
from app.core.core_messages import MessageKeys, msg
from app.core.core_profiling import profile_run
from app.shared.errors import handle_exception
from app.shared.experiment import load_experiment_config

from .exceptions import OutputNotWritableError

logger = logging.getLogger("app_logger")


def build_parser(commands: dict[str, CommandSpec]) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gibbs-posteriors", description=msg.get(MessageKeys.CLI_DESCRIPTION))
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="<command>")
    for name in sorted(commands):
        sub = subparsers.add_parser(name, help=commands[name].help, description=commands[name].help)
        sub.add_argument("--config", required=True, type=Path, help="Experiment-Konfiguration (JSON)")
        sub.add_argument("--out", required=True, type=Path, help="Ausgabeverzeichnis für Berichte und CSV-Tabellen")
        sub.add_argument("--deterministic", action="store_true", help="Sequentielle Reduktionen, byte-identische Berichte")
        sub.add_argument("--seed", type=int, default=None, help="Überschreibt Seeds der Daten und Zufallsinstanzen")
        sub.add_argument("--profile", action="store_true", help="pyinstrument-Profil ins Ausgabeverzeichnis schreiben")
    return parser


def _prepare_out_dir(out_dir: Path) -> None:
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OutputNotWritableError(out_dir, str(exc)) from exc
    if not out_dir.is_dir():
        raise OutputNotWritableError(out_dir, "not a directory")


def write_artifacts(command: str, result: CommandResult, out_dir: Path) -> list[Path]:
    written: list[Path] = []
    report_path = out_dir / f"{command}_report.json"
    try:
        with report_path.open("w", encoding="utf-8", newline="\n") as handle:
            handle.write(result.report.model_dump_json(indent=2) + "\n")
        written.append(report_path)
        for name, table in result.tables.items():
            written.append(table.write(out_dir / f"{command}_{name}.csv"))
    except OSError as exc:
        raise OutputNotWritableError(out_dir, str(exc)) from exc
    return written


def _write_error(out_dir: Path, envelope: dict[str, Any]) -> None:
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "error.json").write_text(json.dumps(envelope, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    except OSError:
        logger.exception("error.json could not be written to %s", out_dir)


def run(
    command: str,
    config_path: Path,
    out_dir: Path,
    *,
    seed: int | None = None,
    deterministic: bool = False,
    profile: bool = False,
    commands: dict[str, CommandSpec] | None = None,
) -> int:
    """Run one subcommand end to end and return the process exit code."""
    settings = get_app_settings()
    journey = RunJourney(command, str(config_path))
    try:
        table = commands if commands is not None else command_table(get_service_registrations())
        spec = table[command]
        _prepare_out_dir(out_dir)
        config = load_experiment_config(config_path, seed)
        logger.info(msg.get(MessageKeys.CLI_CONFIG_LOADED, path=config_path))
        journey.add_step("config", {"path": str(config_path), "seed": seed})

        if profile and not settings.PROFILING_ENABLED:
            logger.warning(msg.get(MessageKeys.CLI_PROFILING_DISABLED))
        ctx = CommandContext(
            config=config,
            out_dir=out_dir,
            seed=seed,
            deterministic=deterministic,
            workers=settings.workers(deterministic),
        )
        with profile_run(profile and settings.PROFILING_ENABLED, out_dir, settings.PROFILING_FORMAT):
            result = spec.handler(ctx)
        logger.info(msg.get(MessageKeys.CLI_ANALYSIS_DONE, command=command))
        journey.add_step("analysis", {"report": type(result.report).__name__, "tables": sorted(result.tables)})

        written = write_artifacts(command, result, out_dir)
        logger.info(msg.get(MessageKeys.CLI_ARTIFACTS_WRITTEN, count=len(written), out=out_dir))
        journey.add_step("artifacts", {"files": [path.name for path in written]})
        return 0
    except Exception as exc:
        exit_code, envelope = handle_exception(exc)
        code = envelope["error"]["code"]
        logger.error(msg.get(MessageKeys.CLI_RUN_FAILED, command=command, code=code))
        journey.set_failure(code)
        sys.stdout.write(json.dumps(envelope, indent=2, ensure_ascii=False) + "\n")
        _write_error(out_dir, envelope)
        return exit_code
    finally:
        journey.log_journey()


def main(argv: Sequence[str] | None = None) -> int:
    setup_logging()
    commands = command_table(get_service_registrations())
    args = build_parser(commands).parse_args(argv)
    return run(
        args.command,
        args.config,
        args.out,
        seed=args.seed,
        deterministic=args.deterministic,
        profile=args.profile,
        commands=commands,
    )


if __name__ == "__main__":
    raise SystemExit(main())
