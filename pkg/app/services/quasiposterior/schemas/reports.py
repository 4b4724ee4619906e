from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from app.shared.schemas import ReportModel, WeightRow


class _Row(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, ser_json_inf_nan="null")


class QuasiMethodResult(_Row):
    method: str
    scale: float
    log_Z: float
    anchored_log_Z: float
    feasible_atoms: int
    infeasible_atoms: list[int]
    not_converged_atoms: list[int]
    posterior: list[WeightRow]


class ConventionRow(_Row):
    name: str
    offset: float
    max_offset_error: float
    tv: float
    delta_log_Z: float
    expected_delta_log_Z: float
    feasible_atoms: int


class QuasiReport(ReportModel):
    model_id: str
    moments: str
    eta: float
    n: int
    infeasible_convention: str
    scale_note: str
    methods: list[QuasiMethodResult]
    conventions: list[ConventionRow]
