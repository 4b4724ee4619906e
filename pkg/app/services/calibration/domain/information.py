"""Information-matching calibration of the learning rate."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np
import numpy.typing as npt

from app.core.core_numerics import Dataset, FloatArray, LossModel, MissingOracleError, ParamGrid, Temperature

from ..config import CalibrationSettings, get_calibration_settings
from .exceptions import InsufficientDataError, SingularInformationError
from .minimizer import HessianSource, MinimizerResult, loss_minimizer, per_datum_hessians

CalibrationMethod = Literal["info-matching", "safebayes"]

# reciprocal condition number below which Ĵ is treated as singular
_RCOND = 1e-12


@dataclass(frozen=True, eq=False, slots=True)
class CalibrationReport:
    eta_hat: Temperature
    theta_hat: FloatArray
    I_hat: FloatArray | None
    J_hat: FloatArray | None
    method: CalibrationMethod
    n: int
    minimizer: MinimizerResult | None = None
    hessian_source: HessianSource | None = None


def information_matrices(
    loss: LossModel, theta: npt.ArrayLike, data: Dataset, settings: CalibrationSettings | None = None
) -> tuple[FloatArray, FloatArray, HessianSource]:
    """Î = (1/n) Σ ∇ℓ∇ℓᵀ and Ĵ = (1/n) Σ ∇²ℓ at *theta*, both symmetrized."""
    point = np.atleast_1d(np.asarray(theta, dtype=np.float64))
    grads = loss.grad_at(point, data)
    info = grads.T @ grads / data.size
    hessians, source = per_datum_hessians(loss, point, data, settings)
    jmat = hessians.mean(axis=0)
    return 0.5 * (info + info.T), 0.5 * (jmat + jmat.T), source


def trace_matching_eta(I_hat: npt.ArrayLike, J_hat: npt.ArrayLike) -> float:
    """η̂ = tr(Ĵ⁻¹) / tr(Ĵ⁻¹ Î Ĵ⁻¹); J/I in one dimension."""
    info = np.atleast_2d(np.asarray(I_hat, dtype=np.float64))
    jmat = np.atleast_2d(np.asarray(J_hat, dtype=np.float64))
    condition = float(np.linalg.cond(jmat))
    if not np.isfinite(condition) or 1.0 / condition < _RCOND:
        raise SingularInformationError("J", condition)
    j_inv = np.linalg.inv(jmat)
    numerator = float(np.trace(j_inv))
    denominator = float(np.trace(j_inv @ info @ j_inv))
    eta = numerator / denominator if denominator > 0 else float("nan")
    if not np.isfinite(eta) or eta <= 0:
        raise SingularInformationError("I", float(denominator))
    return eta


def info_matching_eta(
    loss: LossModel,
    data: Dataset,
    init: npt.ArrayLike | None = None,
    *,
    grid: ParamGrid | None = None,
    settings: CalibrationSettings | None = None,
) -> CalibrationReport:
    """Temperature matching the Gibbs posterior covariance (nηĴ)⁻¹ to the sandwich Ĵ⁻¹ÎĴ⁻¹/n in trace."""
    if not loss.has_grad:
        raise MissingOracleError(loss.name, "Gradienten")
    settings = settings or get_calibration_settings()
    if init is not None:
        dim = int(np.atleast_1d(np.asarray(init)).size)
    else:
        dim = grid.dim if grid is not None else 1
    if data.size < dim + 1:
        raise InsufficientDataError(data.size, dim)

    found = loss_minimizer(loss, data, init, grid=grid, settings=settings)
    info, jmat, source = information_matrices(loss, found.theta, data, settings)
    eta = trace_matching_eta(info, jmat)
    return CalibrationReport(
        eta_hat=Temperature(eta),
        theta_hat=found.theta,
        I_hat=info,
        J_hat=jmat,
        method="info-matching",
        n=data.size,
        minimizer=found,
        hessian_source=source,
    )
