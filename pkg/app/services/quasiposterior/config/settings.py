"""Moment-criterion configuration via environment variables."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class MomentSettings(BaseSettings):
    """Empirical-likelihood and exponential-tilting solver tunables.

    Env vars
    --------
    EL_MAX_ITERATIONS   Newton iteration cap for the EL dual (default: 200)
    EL_TOL              Gradient-norm tolerance of the EL dual (default: 1e-12)
    ET_TOL              Gradient tolerance passed to the ET trust-region solve (default: 1e-12)
    QUASI_LOSS_SCALE    Multiplier on −log R / the ET criterion (default: 1.0)
    HULL_TOL            Minimum weight certifying 0 in the relative interior (default: 1e-10)
    """

    model_config = SettingsConfigDict(env_file=(".env", ".env.dev"), case_sensitive=False, extra="ignore")

    EL_MAX_ITERATIONS: int = Field(default=200, ge=1)
    EL_TOL: float = Field(default=1e-12, gt=0)
    ET_TOL: float = Field(default=1e-12, gt=0)
    QUASI_LOSS_SCALE: float = Field(default=1.0, gt=0)
    HULL_TOL: float = Field(default=1e-10, gt=0)


@lru_cache(maxsize=1)
def get_moment_settings() -> MomentSettings:
    """Return a cached singleton ``MomentSettings`` instance."""
    return MomentSettings()
