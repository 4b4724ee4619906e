from .commands import run_recipe

__all__ = ["run_recipe"]
