"""Outcome grids, predictive families and posterior-induced predictives."""

from .exceptions import InvalidPredictiveError, OutcomeOffGridError, UnsortedOutcomeGridError
from .families import bernoulli_family, gaussian_family, gaussian_scale_family
from .models import DEFAULT_MASS_TOL, OutcomeGrid, Predictive, PredictiveFamily, induced_predictive

__all__ = [
    "DEFAULT_MASS_TOL",
    "InvalidPredictiveError",
    "OutcomeGrid",
    "OutcomeOffGridError",
    "Predictive",
    "PredictiveFamily",
    "UnsortedOutcomeGridError",
    "bernoulli_family",
    "gaussian_family",
    "gaussian_scale_family",
    "induced_predictive",
]
