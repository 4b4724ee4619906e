from .commands import run_additivity, run_variational, run_vnm

__all__ = ["run_additivity", "run_variational", "run_vnm"]
