from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from app.shared.schemas import ReportModel, WeightRow


class _Row(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, ser_json_inf_nan="null")


class MinimizerSummary(_Row):
    method: str
    iterations: int
    grad_norm: float
    hessian_source: str | None = None


class CalibrationResult(_Row):
    method: str
    eta_hat: float
    theta_hat: list[float]
    I_hat: list[list[float]] | None
    J_hat: list[list[float]] | None
    minimizer: MinimizerSummary | None = None


class SafeBayesRow(_Row):
    eta: float
    criterion: float
    excess_criterion: float


class SafeBayesResult(_Row):
    criterion: str
    eta_star: float
    offset_total: float
    rows: list[SafeBayesRow]


class CalibrateReport(ReportModel):
    model_id: str
    n: int
    method: str
    eta_hat: float
    calibrations: list[CalibrationResult]
    safebayes: SafeBayesResult | None = None
    posterior: list[WeightRow]
