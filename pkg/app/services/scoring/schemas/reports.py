from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from app.shared.schemas import ReportModel


class _Row(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, ser_json_inf_nan="null")


class TraceSummary(_Row):
    rule: str
    n: int
    cumulative: float
    infinite_steps: list[int]
    snapped_steps: list[int]


class ShiftInvarianceRow(_Row):
    rule: str
    max_abs_step_difference: float
    cumulative_difference: float


class HeldoutRow(_Row):
    rule: str
    n_train: int
    n_test: int
    total: float


class ModelScores(_Row):
    model_id: str
    family: str
    traces: list[TraceSummary]
    shift_invariance: list[ShiftInvarianceRow] | None = None
    heldout: list[HeldoutRow] | None = None


class DeltaRow(_Row):
    rule: str
    model_1: str
    model_0: str
    delta: float


class ScoreReport(ReportModel):
    eta: float
    models: list[ModelScores]
    deltas: list[DeltaRow]
