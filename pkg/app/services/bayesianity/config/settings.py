"""Diagnostic thresholds via environment variables."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class DiagnosticSettings(BaseSettings):
    """x-normalization verdict thresholds.

    Env vars
    --------
    DIAGNOSTIC_REL_TOL        Largest relative spread of A(θ) still read as constant (default: 1e-3)
    DIAGNOSTIC_ERROR_MARGIN   Required factor between judged quantity and quadrature error (default: 10)
    """

    model_config = SettingsConfigDict(env_file=(".env", ".env.dev"), case_sensitive=False, extra="ignore")

    DIAGNOSTIC_REL_TOL: float = Field(default=1e-3, gt=0)
    DIAGNOSTIC_ERROR_MARGIN: float = Field(default=10.0, ge=1)


@lru_cache(maxsize=1)
def get_diagnostic_settings() -> DiagnosticSettings:
    """Return a cached singleton ``DiagnosticSettings`` instance."""
    return DiagnosticSettings()
