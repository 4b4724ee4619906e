from .settings import DiagnosticSettings, get_diagnostic_settings

__all__ = ["DiagnosticSettings", "get_diagnostic_settings"]
