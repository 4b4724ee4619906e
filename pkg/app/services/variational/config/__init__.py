from .settings import SolverSettings, get_solver_settings

__all__ = ["SolverSettings", "get_solver_settings"]
