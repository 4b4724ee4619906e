from .commands import run_score

__all__ = ["run_score"]
