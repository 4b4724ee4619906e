"""Experiment documents: config schema, loss catalog and data sources."""

from .config import (
    MOMENT_LOSSES,
    AdditivitySection,
    CalibrateSection,
    DataSpec,
    DiagnoseSection,
    DivergenceConfig,
    EvidenceSection,
    ExperimentConfig,
    FamilySpec,
    GridSpec,
    LossSpec,
    ModelSpec,
    PriorSpec,
    QuasiSection,
    RecipeSection,
    SampleGridSpec,
    ScoreSection,
    ShiftSpec,
    UpdateSection,
    VariationalSection,
    VnmSection,
    load_experiment_config,
)
from .data import build_dataset, build_family
from .exceptions import ConfigNotFoundError, ConfigSemanticsError
from .inputs import ModelInputs, resolve_model, resolve_models, resolve_primary_model
from .losses import bernoulli_loglik, build_loss_model, check, gaussian_loglik, gaussian_scale, shift_function, squared

__all__ = [
    "MOMENT_LOSSES",
    "AdditivitySection",
    "CalibrateSection",
    "ConfigNotFoundError",
    "ConfigSemanticsError",
    "DataSpec",
    "DiagnoseSection",
    "DivergenceConfig",
    "EvidenceSection",
    "ExperimentConfig",
    "FamilySpec",
    "GridSpec",
    "LossSpec",
    "ModelInputs",
    "ModelSpec",
    "PriorSpec",
    "QuasiSection",
    "RecipeSection",
    "SampleGridSpec",
    "ScoreSection",
    "ShiftSpec",
    "UpdateSection",
    "VariationalSection",
    "VnmSection",
    "bernoulli_loglik",
    "build_dataset",
    "build_family",
    "build_loss_model",
    "check",
    "gaussian_loglik",
    "gaussian_scale",
    "load_experiment_config",
    "resolve_model",
    "resolve_models",
    "resolve_primary_model",
    "shift_function",
    "squared",
]
