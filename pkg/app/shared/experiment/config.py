"""Experiment configuration: one JSON document validated by pydantic.

Unknown keys are rejected at every level. Synthetic data needs a seed, either
in the document or from ``--seed``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Literal, Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.core_numerics import Distribution, ParamGrid, SampleGrid

from .exceptions import ConfigNotFoundError, ConfigSemanticsError

LossName = Literal[
    "gaussian-loglik",
    "gaussian-scale",
    "bernoulli-loglik",
    "squared",
    "check",
    "el-moment",
    "et-moment",
]
MOMENT_LOSSES: frozenset[str] = frozenset({"el-moment", "et-moment"})
DivergenceName = Literal["KL", "reverse-KL", "chi-squared", "squared-Hellinger", "kl-family"]


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class GridSpec(StrictModel):
    points: list[float] | list[list[float]] | None = None
    start: float | None = None
    stop: float | None = None
    num: int | None = Field(default=None, ge=1)
    labels: list[str] | None = None

    @model_validator(mode="after")
    def _points_or_range(self) -> Self:
        has_range = self.start is not None and self.stop is not None and self.num is not None
        if (self.points is None) == (not has_range):
            raise ValueError("grid needs either 'points' or 'start', 'stop' and 'num'")
        return self

    def build(self) -> ParamGrid:
        if self.points is not None:
            return ParamGrid.from_points(self.points, labels=self.labels)
        if self.start is None or self.stop is None or self.num is None:
            raise ConfigSemanticsError("model.grid", "Gitter braucht entweder 'points' oder 'start', 'stop' und 'num'.")
        atoms = np.linspace(self.start, self.stop, self.num)
        return ParamGrid.from_points(atoms, labels=self.labels)


class PriorSpec(StrictModel):
    kind: Literal["uniform", "weights"] = "uniform"
    weights: list[float] | None = None

    @model_validator(mode="after")
    def _weights_present(self) -> Self:
        if (self.kind == "weights") != (self.weights is not None):
            raise ValueError("'weights' is required for kind 'weights' and only allowed there")
        return self

    def build(self, grid: ParamGrid) -> Distribution:
        if self.weights is None:
            return Distribution.uniform(grid)
        return Distribution.from_weights(grid, self.weights)


class ShiftSpec(StrictModel):
    """Data-only shift c(x) = constant + linear · y."""

    constant: float = 0.0
    linear: float = 0.0

    @property
    def is_zero(self) -> bool:
        return self.constant == 0.0 and self.linear == 0.0


class LossSpec(StrictModel):
    name: LossName
    sigma: float = Field(default=1.0, gt=0)
    tau: float = Field(default=0.5, gt=0, lt=1)
    moments: Literal["mean", "mean-variance"] = "mean"
    variance: float = Field(default=1.0, gt=0)
    scale: float = Field(default=1.0, gt=0)
    shift: ShiftSpec = ShiftSpec()

    @property
    def is_moment(self) -> bool:
        return self.name in MOMENT_LOSSES


class OutcomeGridSpec(StrictModel):
    start: float
    stop: float
    step: float = Field(gt=0)


class FamilySpec(StrictModel):
    name: Literal["bernoulli", "gaussian", "gaussian-scale"]
    sigma: float = Field(default=1.0, gt=0)
    outcome_grid: OutcomeGridSpec | None = None

    @model_validator(mode="after")
    def _continuous_needs_grid(self) -> Self:
        if self.name != "bernoulli" and self.outcome_grid is None:
            raise ValueError(f"family '{self.name}' needs an 'outcome_grid'")
        return self


class ModelSpec(StrictModel):
    id: str = "model"
    grid: GridSpec
    prior: PriorSpec = PriorSpec()
    loss: LossSpec
    family: FamilySpec | None = None


class DataSpec(StrictModel):
    source: Literal["inline", "csv", "synthetic"]
    values: list[float] | list[list[float]] | None = None
    path: str | None = None
    delimiter: str = ","
    skiprows: int = Field(default=0, ge=0)
    generator: Literal["bernoulli", "normal", "student_t"] | None = None
    n: int | None = Field(default=None, ge=1)
    seed: int | None = None
    p: float = Field(default=0.5, ge=0, le=1)
    mean: float = 0.0
    sd: float = Field(default=1.0, gt=0)
    df: float = Field(default=3.0, gt=0)
    outcome_column: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _source_fields(self) -> Self:
        if self.source == "inline" and self.values is None:
            raise ValueError("inline data needs 'values'")
        if self.source == "csv" and self.path is None:
            raise ValueError("csv data needs 'path'")
        if self.source == "synthetic" and (self.generator is None or self.n is None):
            raise ValueError("synthetic data needs 'generator' and 'n'")
        return self


class SampleGridSpec(StrictModel):
    start: float | None = None
    stop: float | None = None
    step: float | None = Field(default=None, gt=0)
    points: list[float] | None = None
    masses: list[float] | None = None

    @model_validator(mode="after")
    def _range_or_points(self) -> Self:
        has_range = self.start is not None and self.stop is not None and self.step is not None
        if has_range == (self.points is not None):
            raise ValueError("sample grid needs either 'points' or 'start', 'stop' and 'step'")
        return self

    def build(self) -> SampleGrid:
        if self.points is not None:
            return SampleGrid.from_points(self.points, self.masses)
        if self.start is None or self.stop is None or self.step is None:
            raise ConfigSemanticsError(
                "sample_grid", "Stichprobengitter braucht entweder 'points' oder 'start', 'stop' und 'step'."
            )
        return SampleGrid.trapezoid(self.start, self.stop, self.step)


class DivergenceConfig(StrictModel):
    name: DivergenceName
    c: float = Field(default=1.0, gt=0)
    a: float = 0.0


class UpdateSection(StrictModel):
    losses: list[float] | None = None
    blocks: int = Field(default=1, ge=1)
    shift: float = 0.0


class DiagnoseSection(StrictModel):
    sample_grid: SampleGridSpec
    extract: bool = False


class VariationalSection(StrictModel):
    divergence: DivergenceConfig = DivergenceConfig(name="KL")
    losses: list[float] | None = None
    tol: float | None = Field(default=None, gt=0)
    brute_force: bool = True


class AdditivitySection(StrictModel):
    divergences: list[DivergenceConfig] = Field(
        default_factory=lambda: [
            DivergenceConfig(name="KL"),
            DivergenceConfig(name="reverse-KL"),
            DivergenceConfig(name="chi-squared"),
            DivergenceConfig(name="squared-Hellinger"),
        ]
    )
    q1: list[float] = Field(default_factory=lambda: [0.75, 0.25])
    p1: list[float] = Field(default_factory=lambda: [0.5, 0.5])
    q2: list[float] = Field(default_factory=lambda: [0.75, 0.25])
    p2: list[float] = Field(default_factory=lambda: [0.5, 0.5])
    random_instances: int = Field(default=0, ge=0)
    seed: int | None = None


class EvidenceSection(StrictModel):
    shifts: list[float] = Field(default_factory=lambda: [1.0, 0.0])
    anchored: bool = True


class ScoreSection(StrictModel):
    rules: list[Literal["log", "crps"]] = Field(default_factory=lambda: ["log", "crps"])
    compare_shift: ShiftSpec | None = None
    train: list[int] | None = None
    test: list[int] | None = None

    @model_validator(mode="after")
    def _split_pair(self) -> Self:
        if (self.train is None) != (self.test is None):
            raise ValueError("'train' and 'test' must be given together")
        return self


class CalibrateSection(StrictModel):
    method: Literal["info-matching", "safebayes", "both"] = "info-matching"
    eta_grid: list[float] = Field(default_factory=lambda: [0.25, 0.5, 1.0, 2.0])
    criterion: Literal["implied-log-loss", "expected-loss", "predictive-log-loss"] = "implied-log-loss"
    sample_grid: SampleGridSpec | None = None
    init: list[float] | None = None


class QuasiSection(StrictModel):
    methods: list[Literal["el", "et"]] = Field(default_factory=lambda: ["el", "et"])
    scale: float | None = Field(default=None, gt=0)
    conventions: bool = True


class VnmSection(StrictModel):
    utilities: list[float] | None = None
    random_instances: int = Field(default=0, ge=0)
    size: int = Field(default=5, ge=2)
    seed: int | None = None


class RecipeSection(StrictModel):
    calibration: Literal["info-matching", "safebayes"] = "info-matching"
    eta_grid: list[float] = Field(default_factory=lambda: [0.25, 0.5, 1.0, 2.0])
    sample_grid: SampleGridSpec | None = None
    blocks: int = Field(default=2, ge=1)


class ExperimentConfig(StrictModel):
    model: ModelSpec | None = None
    models: list[ModelSpec] | None = None
    eta: float = Field(default=1.0, gt=0)
    data: DataSpec | None = None

    update: UpdateSection | None = None
    diagnose: DiagnoseSection | None = None
    variational: VariationalSection | None = None
    additivity: AdditivitySection | None = None
    evidence: EvidenceSection | None = None
    score: ScoreSection | None = None
    calibrate: CalibrateSection | None = None
    quasi: QuasiSection | None = None
    vnm: VnmSection | None = None
    recipe: RecipeSection | None = None

    @model_validator(mode="after")
    def _model_or_models(self) -> Self:
        if self.model is not None and self.models is not None:
            raise ValueError("use either 'model' or 'models', not both")
        return self

    def all_models(self) -> list[ModelSpec]:
        if self.models is not None:
            return list(self.models)
        return [self.model] if self.model is not None else []

    def require_model(self) -> ModelSpec:
        models = self.all_models()
        if not models:
            raise ConfigSemanticsError("model", "Dieser Befehl braucht ein Modell ('model').")
        return models[0]

    def require_data(self) -> DataSpec:
        if self.data is None:
            raise ConfigSemanticsError("data", "Dieser Befehl braucht Daten ('data').")
        return self.data

    def with_seed(self, seed: int | None) -> ExperimentConfig:
        """Apply a ``--seed`` override to the data source and seeded sections."""
        if seed is None:
            return self
        updates: dict[str, object] = {}
        if self.data is not None and self.data.source == "synthetic":
            updates["data"] = self.data.model_copy(update={"seed": seed})
        for name in ("additivity", "vnm"):
            section = getattr(self, name)
            if section is not None:
                updates[name] = section.model_copy(update={"seed": seed})
        return self.model_copy(update=updates)


def load_experiment_config(path: Path, seed: int | None = None) -> ExperimentConfig:
    if not path.is_file():
        raise ConfigNotFoundError(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigSemanticsError("config", f"Ungültiges JSON: {exc}") from exc
    config = ExperimentConfig.model_validate(payload).with_seed(seed)
    if config.data is not None and config.data.path is not None and not Path(config.data.path).is_absolute():
        resolved = str((path.parent / config.data.path).resolve())
        config = config.model_copy(update={"data": config.data.model_copy(update={"path": resolved})})
    if config.data is not None and config.data.source == "synthetic" and config.data.seed is None:
        raise ConfigSemanticsError("data.seed", "Synthetische Daten brauchen einen Seed (Konfiguration oder --seed).")
    return config
