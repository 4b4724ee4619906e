"""Scoring configuration via environment variables."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class ScoringSettings(BaseSettings):
    """
    Env vars
    --------
    SCORING_SNAP_FRACTION   Outcomes within this fraction of the local node spacing snap to the node (default: 0.5)
    PREDICTIVE_MASS_TOL     Allowed deviation of a family row's mass from 1 (default: 1e-8)
    """

    model_config = SettingsConfigDict(env_file=(".env", ".env.dev"), case_sensitive=False, extra="ignore")

    SCORING_SNAP_FRACTION: float = Field(default=0.5, ge=0, le=0.5)
    PREDICTIVE_MASS_TOL: float = Field(default=1e-8, gt=0)


@lru_cache(maxsize=1)
def get_scoring_settings() -> ScoringSettings:
    """Return a cached singleton ``ScoringSettings`` instance."""
    return ScoringSettings()
