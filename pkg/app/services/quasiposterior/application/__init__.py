from .commands import run_quasi
from .losses import criterion_for, moment_losses, moment_model_for

__all__ = ["criterion_for", "moment_losses", "moment_model_for", "run_quasi"]
