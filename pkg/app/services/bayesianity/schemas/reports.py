from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from app.shared.schemas import ReportModel


class PartitionRow(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, ser_json_inf_nan="null")

    atom: int
    label: str
    log_A: float
    A: float
    log_A_unshifted: float


class ExtractionSummary(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, ser_json_inf_nan="null")

    log_normalizer: float
    max_row_mass_error: float
    round_trip_tv: float | None = None


class DiagnoseReport(ReportModel):
    model_id: str
    loss: str
    eta: float
    verdict: str
    max_rel_variation: float
    quadrature_error_estimate: float
    rel_tol: float
    error_margin: float
    caveat: str
    atoms: list[PartitionRow]
    extraction: ExtractionSummary | None = None
