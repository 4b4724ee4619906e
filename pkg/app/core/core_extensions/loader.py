from __future__ import annotations

import logging
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from importlib import import_module
from pathlib import Path
from typing import TYPE_CHECKING

from pydantic import BaseModel

from app.core.core_messages import MessageKeys, msg
from app.shared.utils import CsvTable

if TYPE_CHECKING:
    from app.shared.experiment import ExperimentConfig

logger = logging.getLogger("app_logger")


@dataclass(frozen=True)
class CommandContext:
    config: ExperimentConfig
    out_dir: Path
    seed: int | None = None
    deterministic: bool = False
    workers: int = 1


@dataclass(frozen=True)
class CommandResult:
    report: BaseModel
    tables: Mapping[str, CsvTable] = field(default_factory=dict)


CommandHandler = Callable[[CommandContext], CommandResult]


@dataclass(frozen=True)
class CommandSpec:
    name: str
    help: str
    handler: CommandHandler


@dataclass(frozen=True)
class ServiceRegistration:
    name: str
    commands: list[CommandSpec] = field(default_factory=list)


def discover_service_module_names(services_dir: Path | None = None) -> list[str]:
    resolved_services_dir = services_dir or (Path(__file__).resolve().parents[2] / "services")
    if not resolved_services_dir.is_dir():
        return []

    module_names: list[str] = []
    for service_dir in resolved_services_dir.iterdir():
        if not service_dir.is_dir() or service_dir.name.startswith("_"):
            continue
        if (service_dir / "integration.py").is_file():
            module_names.append(f"app.services.{service_dir.name}.integration")
    return sorted(module_names)


def _coerce_registration(module_name: str, payload: object) -> ServiceRegistration:
    if isinstance(payload, ServiceRegistration):
        return payload
    if not isinstance(payload, dict):
        raise TypeError(f"{module_name}.register_service() must return dict or ServiceRegistration")

    name = payload.get("name", module_name)
    commands = payload.get("commands", [])
    if not isinstance(name, str):
        raise TypeError(f"{module_name}.register_service().name must be str")
    if not isinstance(commands, list) or not all(isinstance(command, CommandSpec) for command in commands):
        raise TypeError(f"{module_name}.register_service().commands must be list[CommandSpec]")
    return ServiceRegistration(name=name, commands=commands)


def load_service_registrations(module_names: list[str]) -> list[ServiceRegistration]:
    registrations: list[ServiceRegistration] = []
    for module_name in module_names:
        try:
            module = import_module(module_name)
        except Exception as exc:
            logger.warning(msg.get(MessageKeys.EXTENSIONS_SKIP_MODULE, module=module_name, error=exc))
            continue
        register_service = getattr(module, "register_service", None)
        if not callable(register_service):
            logger.warning(msg.get(MessageKeys.EXTENSIONS_REGISTER_SERVICE_MISSING, module=module_name))
            continue
        try:
            registrations.append(_coerce_registration(module_name, register_service()))
        except Exception as exc:
            logger.warning(msg.get(MessageKeys.EXTENSIONS_REGISTER_SERVICE_FAILED, module=module_name, error=exc))
    return registrations


def get_service_registrations(services_dir: Path | None = None) -> list[ServiceRegistration]:
    module_names = discover_service_module_names(services_dir)
    if not module_names:
        raise RuntimeError(msg.get(MessageKeys.EXTENSIONS_NO_INTEGRATION_MODULES))

    registrations = load_service_registrations(module_names)
    if not registrations:
        raise RuntimeError(msg.get(MessageKeys.EXTENSIONS_NO_VALID_REGISTRATIONS, modules=", ".join(module_names)))
    for registration in registrations:
        if not registration.commands:
            raise RuntimeError(msg.get(MessageKeys.EXTENSIONS_NO_COMMANDS_CONFIGURED, service=registration.name))
    return registrations


def command_table(registrations: list[ServiceRegistration]) -> dict[str, CommandSpec]:
    """Command name -> spec; a name registered by two services is an error."""
    table: dict[str, CommandSpec] = {}
    owners: dict[str, str] = {}
    for registration in registrations:
        for command in registration.commands:
            if command.name in table:
                raise RuntimeError(
                    msg.get(
                        MessageKeys.EXTENSIONS_DUPLICATE_COMMAND,
                        command=command.name,
                        first=owners[command.name],
                        second=registration.name,
                    )
                )
            table[command.name] = command
            owners[command.name] = registration.name
    return table
