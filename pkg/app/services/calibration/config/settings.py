"""Calibration configuration via environment variables."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class CalibrationSettings(BaseSettings):
    """Loss-minimizer and SafeBayes tunables.

    Env vars
    --------
    MINIMIZER_MAX_ITERATIONS   Trust-region iteration cap (default: 500)
    MINIMIZER_GRAD_TOL         Gradient norm accepted at the minimizer (default: 1e-8)
    FD_REL_STEP                Central-difference step, scaled by 1 + |θ| (default: 1e-5)
    SAFEBAYES_TIE_TOL          Criterion ties within this relative tolerance go to the smaller η (default: 1e-12)
    """

    model_config = SettingsConfigDict(env_file=(".env", ".env.dev"), case_sensitive=False, extra="ignore")

    MINIMIZER_MAX_ITERATIONS: int = Field(default=500, ge=1)
    MINIMIZER_GRAD_TOL: float = Field(default=1e-8, gt=0)
    FD_REL_STEP: float = Field(default=1e-5, gt=0, lt=1)
    SAFEBAYES_TIE_TOL: float = Field(default=1e-12, ge=0)


@lru_cache(maxsize=1)
def get_calibration_settings() -> CalibrationSettings:
    """Return a cached singleton ``CalibrationSettings`` instance."""
    return CalibrationSettings()
