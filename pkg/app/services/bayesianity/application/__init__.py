from .commands import run_diagnose

__all__ = ["run_diagnose"]
