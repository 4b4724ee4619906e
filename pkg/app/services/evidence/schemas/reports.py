from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from app.shared.schemas import ReportModel, WeightRow


class _Row(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, ser_json_inf_nan="null")


class EvidenceDocument(_Row):
    model_id: str
    eta: float
    log_Z: float
    anchored_log_Z: float
    shift_applied: float
    warning: str


class ShiftCheck(_Row):
    c: float
    tv: float
    delta_log_Z: float
    expected_delta_log_Z: float


class BatchingCheck(_Row):
    blocks: int
    tv_to_one_shot: float
    log_Z_difference: float


class ModelUpdate(_Row):
    model_id: str
    loss: str
    n: int | None
    min_loss: float
    excluded_atoms: list[int]
    posterior: list[WeightRow]
    anchored_evidence: float
    evidence: EvidenceDocument
    shift_check: ShiftCheck | None = None
    batching: BatchingCheck | None = None


class BayesFactorRow(_Row):
    numerator: str
    denominator: str
    log_bf: float


class UpdateReport(ReportModel):
    eta: float
    warning: str
    models: list[ModelUpdate]
    bayes_factors: list[BayesFactorRow]


class AnchoredRow(_Row):
    log_ratio: float
    evidence_1: float
    evidence_0: float
    evidence_difference: float
    note: str


class EvidenceDemoReport(ReportModel):
    warning: str
    eta: float
    model_1: str
    model_0: str
    shift_1: float
    shift_0: float
    log_bf_before: float
    log_bf_after: float
    change: float
    predicted_change: float
    tv_model_1: float
    tv_model_0: float
    records: list[EvidenceDocument]
    anchored: AnchoredRow | None = None
