"""Built-in predictive families indexed by a 1-d parameter grid."""

from __future__ import annotations

import numpy as np
from scipy.stats import norm

from app.core.core_numerics import InvalidGridError, ParamGrid

from .exceptions import InvalidPredictiveError
from .models import DEFAULT_MASS_TOL, OutcomeGrid, PredictiveFamily


def _normalized_rows(table: np.ndarray, grid: OutcomeGrid) -> np.ndarray:
    masses = table @ grid.weights
    if (masses <= 0).any() or not np.isfinite(masses).all():
        raise InvalidPredictiveError(message="Eine Zeile der Familie hat auf dem Ergebnisgitter keine Masse.")
    return table / masses[:, None]


def bernoulli_family(params: ParamGrid, mass_tol: float = DEFAULT_MASS_TOL) -> PredictiveFamily:
    theta = params.atoms[:, 0]
    if (theta < 0).any() or (theta > 1).any():
        raise InvalidGridError(message="Bernoulli-Parameter müssen in [0, 1] liegen.")
    table = np.column_stack([1.0 - theta, theta])
    return PredictiveFamily(outcome_grid=OutcomeGrid.discrete_points([0.0, 1.0]), density_table=table, mass_tol=mass_tol)


def gaussian_family(
    params: ParamGrid, outcome_grid: OutcomeGrid, sigma: float = 1.0, mass_tol: float = DEFAULT_MASS_TOL
) -> PredictiveFamily:
    """N(θ, σ²) rows, renormalized on the (truncated) outcome grid."""
    table = norm.pdf(outcome_grid.nodes[None, :], loc=params.atoms[:, :1], scale=sigma)
    return PredictiveFamily(outcome_grid=outcome_grid, density_table=_normalized_rows(table, outcome_grid), mass_tol=mass_tol)


def gaussian_scale_family(
    params: ParamGrid, outcome_grid: OutcomeGrid, mass_tol: float = DEFAULT_MASS_TOL
) -> PredictiveFamily:
    """N(0, θ²) rows; θ is the standard deviation."""
    sigma = params.atoms[:, :1]
    if (sigma <= 0).any():
        raise InvalidGridError(message="Skalenparameter müssen strikt positiv sein.")
    table = norm.pdf(outcome_grid.nodes[None, :], loc=0.0, scale=sigma)
    return PredictiveFamily(outcome_grid=outcome_grid, density_table=_normalized_rows(table, outcome_grid), mass_tol=mass_tol)
