from __future__ import annotations

from pydantic import BaseModel, ConfigDict

from app.shared.schemas import ReportModel, WeightRow


class _Row(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, ser_json_inf_nan="null")


class BruteForceCheck(_Row):
    weights: list[float]
    objective: float
    tv_to_solver: float


class VariationalReport(ReportModel):
    model_id: str
    divergence: str
    divergence_params: dict[str, float]
    eta: float
    converged: bool
    iterations: int
    objective: float
    kkt_residual: float
    final_step_norm: float
    solution: list[WeightRow]
    gibbs_tv: float
    gibbs_optimal_value: float
    objective_minus_gibbs_value: float
    brute_force: BruteForceCheck | None = None


class AdditivityGap(_Row):
    divergence: str
    gap: float
    additive: bool


class RandomGapSummary(_Row):
    divergence: str
    instances: int
    max_abs_gap: float
    additive_instances: int


class AdditivityReport(ReportModel):
    canonical_q: list[float]
    canonical_p: list[float]
    tolerance: float
    canonical: list[AdditivityGap]
    random: list[RandomGapSummary]


class UtilityCheck(_Row):
    max_weight: float
    residual_mass: float
    iterations: int
    converged: bool
    value: float
    rationalizable: bool


class RandomVnmSummary(_Row):
    instances: int
    point_masses: int


class VnmReport(ReportModel):
    utilities: list[float]
    argmax: list[int]
    optimal_rule: list[float]
    point_mass_value: float
    uniform_over_argmax_value: float
    maximizer: UtilityCheck
    random: RandomVnmSummary | None = None
