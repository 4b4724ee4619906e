from .profiler import profile_run

__all__ = ["profile_run"]
