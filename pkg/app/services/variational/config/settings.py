"""Solver configuration via environment variables."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class SolverSettings(BaseSettings):
    """Exponentiated-gradient solver and brute-force oracle tunables.

    Env vars
    --------
    SOLVER_MAX_ITERATIONS   Iteration cap (default: 100000)
    SOLVER_TOL              Convergence tolerance on the KKT residual (default: 1e-10)
    SOLVER_ARMIJO_C         Sufficient-decrease constant (default: 1e-4)
    SOLVER_BACKTRACK        Step shrink factor on rejection (default: 0.5)
    SOLVER_MAX_STEP         Upper bound on the mirror step (default: 1e12)
    ORACLE_COARSE_STEP      Brute-force resolution on the 1-simplex (default: 1e-4)
    ORACLE_FINE_STEP        Refinement resolution (default: 1e-7)
    """

    model_config = SettingsConfigDict(env_file=(".env", ".env.dev"), case_sensitive=False, extra="ignore")

    SOLVER_MAX_ITERATIONS: int = Field(default=100_000, ge=1)
    SOLVER_TOL: float = Field(default=1e-10, gt=0)
    SOLVER_ARMIJO_C: float = Field(default=1e-4, gt=0, lt=1)
    SOLVER_BACKTRACK: float = Field(default=0.5, gt=0, lt=1)
    SOLVER_MAX_STEP: float = Field(default=1e12, gt=0)
    ORACLE_COARSE_STEP: float = Field(default=1e-4, gt=0, lt=1)
    ORACLE_FINE_STEP: float = Field(default=1e-7, gt=0, lt=1)


@lru_cache(maxsize=1)
def get_solver_settings() -> SolverSettings:
    """Return a cached singleton ``SolverSettings`` instance."""
    return SolverSettings()
