from __future__ import annotations

import json
import logging
from collections.abc import Iterator, Mapping, Sequence
from enum import StrEnum
from pathlib import Path
from typing import cast

_CORE_DIR = Path(__file__).resolve().parent
_SERVICES_DIR = Path(__file__).resolve().parents[2] / "services"


class ImproperlyConfiguredError(RuntimeError):
    """Raised when message files are missing or invalid."""


class MessageKeyLookup:
    def __init__(self, keys_enum: type[StrEnum]) -> None:
        self._keys_enum = keys_enum

    def __getattr__(self, name: str) -> str:
        try:
            return str(getattr(self._keys_enum, name))
        except AttributeError as exc:
            raise AttributeError(name) from exc


def _flatten(node: Mapping[str, object], source: Path, prefix: str = "") -> Iterator[tuple[str, str]]:
    for key, value in node.items():
        dotted = f"{prefix}.{key}" if prefix else key
        if isinstance(value, Mapping):
            yield from _flatten(cast(Mapping[str, object], value), source, dotted)
        elif isinstance(value, str):
            yield dotted, value
        else:
            raise ImproperlyConfiguredError(f"Message key '{dotted}' in {source} must resolve to a string")


def _enum_name(key: str) -> str:
    sanitized = "".join(ch if ch.isalnum() else "_" for ch in key).upper().strip("_")
    if not sanitized:
        return "KEY"
    return f"KEY_{sanitized}" if sanitized[0].isdigit() else sanitized


class MessageService:
    """Localized log and console texts.

    The catalog for a language is ``app/core/core_messages/messages.<lang>.json`` plus
    ``app/services/<name>/messages/messages.<lang>.json``; a service file may only define
    keys below its own ``<name>``. Keys missing in another language fall back to the
    default language.
    """

    def __init__(self, language: str = "de", *, message_files: Sequence[Path] | None = None) -> None:
        self._logger = logging.getLogger("app_logger")
        self._language = self.normalize_language(language) or "de"
        self._message_files = tuple(message_files) if message_files is not None else None
        self._catalogs: dict[str, dict[str, str]] = {}
        keys = self.catalog(self._language)
        members = {_enum_name(key): key for key in sorted(keys)} or {"ROOT": "root"}
        self._keys = MessageKeyLookup(cast(type[StrEnum], StrEnum("MessageKeys", members)))

    @property
    def language(self) -> str:
        return self._language

    @property
    def keys(self) -> MessageKeyLookup:
        return self._keys

    @staticmethod
    def normalize_language(value: str | None) -> str | None:
        if not value or not value.strip():
            return None
        # de-DE / en_US -> de / en
        return value.strip().lower().replace("_", "-").split("-", 1)[0]

    def get(self, key: str | StrEnum, *, lang: str | None = None, **kwargs: object) -> str:
        lookup_key = str(key)
        text = self._lookup(lookup_key, self.normalize_language(lang) or self._language)
        if text is None:
            self._logger.warning("Missing message key: %s", lookup_key)
            return lookup_key
        if not kwargs:
            return text
        try:
            return text.format(**kwargs)
        except (KeyError, IndexError, ValueError):
            self._logger.warning("Message interpolation failed for key: %s", lookup_key)
            return text

    def catalog(self, language: str) -> dict[str, str]:
        """Flat ``dotted.key -> text`` catalog for *language* (cached)."""
        cached = self._catalogs.get(language)
        if cached is not None:
            return cached
        merged: dict[str, str] = {}
        for path, namespace in self._sources(language):
            document = self._read(path)
            if namespace is not None and set(document) - {namespace}:
                raise ImproperlyConfiguredError(f"Message file {path} may only define keys below '{namespace}'")
            for dotted, text in _flatten(document, path):
                if dotted in merged:
                    raise ImproperlyConfiguredError(f"Duplicate message key '{dotted}' found in {path}")
                merged[dotted] = text
        self._catalogs[language] = merged
        return merged

    def missing_keys(self, language: str) -> list[str]:
        """Keys of the default catalog that *language* does not translate."""
        return sorted(set(self.catalog(self._language)) - set(self.catalog(language)))

    def _lookup(self, key: str, language: str) -> str | None:
        if language != self._language:
            try:
                text = self.catalog(language).get(key)
            except ImproperlyConfiguredError:
                text = None
            if text is not None:
                return text
        return self.catalog(self._language).get(key)

    def _sources(self, language: str) -> list[tuple[Path, str | None]]:
        if self._message_files is not None:
            return [(path, None) for path in self._message_files]
        sources: list[tuple[Path, str | None]] = [(_CORE_DIR / f"messages.{language}.json", None)]
        for messages_dir in sorted(_SERVICES_DIR.glob("*/messages")):
            sources.append((messages_dir / f"messages.{language}.json", messages_dir.parent.name))
        return sources

    @staticmethod
    def _read(path: Path) -> Mapping[str, object]:
        try:
            loaded: object = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError as exc:
            raise ImproperlyConfiguredError(f"Message file not found: {path}") from exc
        except json.JSONDecodeError as exc:
            raise ImproperlyConfiguredError(f"Invalid JSON in message file {path}: {exc}") from exc
        except OSError as exc:
            raise ImproperlyConfiguredError(f"Unable to read message file {path}: {exc}") from exc
        if not isinstance(loaded, dict):
            raise ImproperlyConfiguredError(f"Message file {path} must contain a JSON object at the top level")
        return cast(dict[str, object], loaded)
