"""Model inputs resolved from an experiment document."""

from __future__ import annotations

from dataclasses import dataclass

from app.core.core_numerics import AtomLosses, Dataset, Distribution, LossMatrix, LossModel, ParamGrid

from .config import ExperimentConfig, ModelSpec
from .data import build_dataset
from .exceptions import ConfigSemanticsError
from .losses import build_loss_model


@dataclass(frozen=True, eq=False)
class ModelInputs:
    spec: ModelSpec
    grid: ParamGrid
    prior: Distribution
    loss: LossModel | None
    data: Dataset | None

    @property
    def model_id(self) -> str:
        return self.spec.id

    def require_loss(self) -> LossModel:
        if self.loss is None:
            raise ConfigSemanticsError(
                "model.loss.name",
                f"'{self.spec.loss.name}' wird nur von 'update', 'quasi' und 'evidence-demo' unterstützt.",
            )
        return self.loss

    def require_data(self) -> Dataset:
        if self.data is None:
            raise ConfigSemanticsError("data", "Dieser Befehl braucht Daten ('data').")
        return self.data

    def loss_matrix(self) -> LossMatrix:
        return self.require_loss().evaluate(self.grid, self.require_data(), support=self.prior.support)

    def cumulative_losses(self) -> AtomLosses:
        return self.loss_matrix().cumulative()


def resolve_model(spec: ModelSpec, data: Dataset | None) -> ModelInputs:
    grid = spec.grid.build()
    prior = spec.prior.build(grid)
    column = data.outcome_column if data is not None else 0
    loss = None if spec.loss.is_moment else build_loss_model(spec.loss, column)
    return ModelInputs(spec=spec, grid=grid, prior=prior, loss=loss, data=data)


def resolve_models(config: ExperimentConfig) -> list[ModelInputs]:
    """All configured models sharing one dataset (built once)."""
    models = config.all_models() or [config.require_model()]
    data = build_dataset(config.data) if config.data is not None else None
    return [resolve_model(spec, data) for spec in models]


def resolve_primary_model(config: ExperimentConfig) -> ModelInputs:
    return resolve_models(config)[0]
