"""Numerical core: grids, log-space distributions, temperatures and losses."""

from .exceptions import (
    DegenerateWeightsError,
    EmptyDatasetError,
    EmptySampleGridError,
    GridMismatchError,
    InvalidGridError,
    InvalidScaleError,
    InvalidTemperatureError,
    InvalidWeightError,
    MissingOracleError,
    NonFiniteLossError,
)
from .logspace import log_mean_exp, normalize_log_weights, total_variation
from .models import (
    SIMPLEX_TOL,
    AtomLosses,
    BoolArray,
    Dataset,
    Distribution,
    FloatArray,
    GradOracle,
    HessOracle,
    LossMatrix,
    LossModel,
    ParamGrid,
    PointwiseLoss,
    SampleGrid,
    ShiftFn,
    Temperature,
)

__all__ = [
    "SIMPLEX_TOL",
    "AtomLosses",
    "BoolArray",
    "Dataset",
    "DegenerateWeightsError",
    "Distribution",
    "EmptyDatasetError",
    "EmptySampleGridError",
    "FloatArray",
    "GradOracle",
    "GridMismatchError",
    "HessOracle",
    "InvalidGridError",
    "InvalidScaleError",
    "InvalidTemperatureError",
    "InvalidWeightError",
    "LossMatrix",
    "LossModel",
    "MissingOracleError",
    "NonFiniteLossError",
    "ParamGrid",
    "PointwiseLoss",
    "SampleGrid",
    "ShiftFn",
    "Temperature",
    "log_mean_exp",
    "normalize_log_weights",
    "total_variation",
]
