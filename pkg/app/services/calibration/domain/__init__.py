from .exceptions import InsufficientDataError, MinimizerDivergedError, SingularInformationError
from .information import (
    CalibrationMethod,
    CalibrationReport,
    info_matching_eta,
    information_matrices,
    trace_matching_eta,
)
from .minimizer import HessianSource, MinimizerResult, grid_argmin, loss_minimizer, per_datum_hessians
from .safebayes import SafeBayesCriterion, SafeBayesReport, safebayes_calibration, safebayes_select

__all__ = [
    "CalibrationMethod",
    "CalibrationReport",
    "HessianSource",
    "InsufficientDataError",
    "MinimizerDivergedError",
    "MinimizerResult",
    "SafeBayesCriterion",
    "SafeBayesReport",
    "SingularInformationError",
    "grid_argmin",
    "info_matching_eta",
    "information_matrices",
    "loss_minimizer",
    "per_datum_hessians",
    "safebayes_calibration",
    "safebayes_select",
    "trace_matching_eta",
]
