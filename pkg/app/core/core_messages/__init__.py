from __future__ import annotations

from app.config import get_app_settings

from .loader import ImproperlyConfiguredError, MessageKeyLookup, MessageService

msg = MessageService(language=get_app_settings().MESSAGE_LANG)
MessageKeys = msg.keys

__all__ = [
    "ImproperlyConfiguredError",
    "MessageKeyLookup",
    "MessageKeys",
    "MessageService",
    "msg",
]
