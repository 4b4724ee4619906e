from .settings import MomentSettings, get_moment_settings

__all__ = ["MomentSettings", "get_moment_settings"]
