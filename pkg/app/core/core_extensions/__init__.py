from __future__ import annotations

from .loader import (
    CommandContext,
    CommandHandler,
    CommandResult,
    CommandSpec,
    ServiceRegistration,
    command_table,
    discover_service_module_names,
    get_service_registrations,
    load_service_registrations,
)

__all__ = [
    "CommandContext",
    "CommandHandler",
    "CommandResult",
    "CommandSpec",
    "ServiceRegistration",
    "command_table",
    "discover_service_module_names",
    "get_service_registrations",
    "load_service_registrations",
]
