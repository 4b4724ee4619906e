from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from app.services.calibration.schemas import CalibrationResult, SafeBayesResult
from app.shared.schemas import ReportModel, WeightRow


class _Row(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, ser_json_inf_nan="null")


class LossStep(_Row):
    name: str
    scale: float
    units: str
    has_gradient: bool
    shifted: bool


class SeparabilityStep(_Row):
    penalty: str
    product_gap: float
    block_divergence: float
    blocks: int
    batching_tv: float
    batching_log_Z_difference: float
    coherent: bool


class InterpretationStep(_Row):
    verdict: str
    max_rel_variation: float
    caveat: str


class ChecklistRow(_Row):
    item: str
    value: str


class RecipeReport(ReportModel):
    model_id: str
    n: int
    loss: LossStep
    separability: SeparabilityStep
    calibration: CalibrationResult
    safebayes: SafeBayesResult | None = None
    interpretation: InterpretationStep | None = None
    eta: float
    log_Z: float
    anchored_log_Z: float
    posterior: list[WeightRow]
    checklist: list[ChecklistRow]
