"""Empirical loss minimizer θ̂ = argmin (1/n) Σ ℓ(θ; x_t)."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
import numpy.typing as npt
from scipy.optimize import OptimizeResult, minimize

from app.core.core_messages import MessageKeys, msg
from app.core.core_numerics import Dataset, FloatArray, LossModel, MissingOracleError, ParamGrid

from ..config import CalibrationSettings, get_calibration_settings
from .exceptions import MinimizerDivergedError

logger = logging.getLogger("app_logger")

HessianSource = Literal["analytic", "finite-difference"]


@dataclass(frozen=True, eq=False, slots=True)
class MinimizerResult:
    theta: FloatArray
    method: Literal["trust-exact", "grid"]
    grad_norm: float
    iterations: int
    hessian_source: HessianSource | None = None
    atom_index: int | None = None


def per_datum_hessians(
    loss: LossModel, theta: npt.ArrayLike, data: Dataset, settings: CalibrationSettings | None = None
) -> tuple[FloatArray, HessianSource]:
    """(n, d, d) Hessians; central differences of the gradient oracle when no Hessian is supplied."""
    point = np.atleast_1d(np.asarray(theta, dtype=np.float64))
    if loss.has_hess:
        return loss.hess_at(point, data), "analytic"
    settings = settings or get_calibration_settings()
    d = point.size
    out = np.empty((data.size, d, d))
    for j in range(d):
        h = settings.FD_REL_STEP * (1.0 + abs(point[j]))
        step = np.zeros(d)
        step[j] = h
        out[:, :, j] = (loss.grad_at(point + step, data) - loss.grad_at(point - step, data)) / (2.0 * h)
    return 0.5 * (out + out.transpose(0, 2, 1)), "finite-difference"


def grid_argmin(loss: LossModel, data: Dataset, grid: ParamGrid) -> int:
    """Index of the atom with the smallest finite empirical loss (first on ties)."""
    with np.errstate(divide="ignore", invalid="ignore"):
        means = np.array([loss.mean_loss(atom, data) for atom in grid.atoms])
    means = np.where(np.isfinite(means), means, np.inf)
    if not np.isfinite(means).any():
        raise MinimizerDivergedError("no finite empirical loss on the grid", [])
    return int(np.argmin(means))


def loss_minimizer(
    loss: LossModel,
    data: Dataset,
    init: npt.ArrayLike | None = None,
    *,
    grid: ParamGrid | None = None,
    settings: CalibrationSettings | None = None,
) -> MinimizerResult:
    """Trust-region Newton on the mean loss, or the grid argmin when there is no gradient.

    Without *init* the search starts at the grid argmin (or 0 without a grid).
    """
    settings = settings or get_calibration_settings()
    if not loss.has_grad:
        if grid is None:
            raise MissingOracleError(loss.name, "Gradienten")
        logger.info(msg.get(MessageKeys.CALIBRATION_GRID_FALLBACK, loss=loss.name))
        index = grid_argmin(loss, data, grid)
        return MinimizerResult(
            theta=np.array(grid.atoms[index], dtype=np.float64),
            method="grid",
            grad_norm=math.nan,
            iterations=0,
            atom_index=index,
        )

    if init is not None:
        start = np.atleast_1d(np.asarray(init, dtype=np.float64))
    elif grid is not None:
        start = np.array(grid.atoms[grid_argmin(loss, data, grid)], dtype=np.float64)
    else:
        start = np.zeros(1)

    if not loss.has_hess:
        logger.info(msg.get(MessageKeys.CALIBRATION_FD_HESSIAN, loss=loss.name))

    def fun(theta: FloatArray) -> float:
        with np.errstate(divide="ignore", invalid="ignore"):
            value = loss.mean_loss(theta, data)
        return value if math.isfinite(value) else math.inf

    def jac(theta: FloatArray) -> FloatArray:
        return loss.grad_at(theta, data).mean(axis=0)

    def hess(theta: FloatArray) -> FloatArray:
        return per_datum_hessians(loss, theta, data, settings)[0].mean(axis=0)

    trace: list[dict[str, object]] = []

    def record(intermediate_result: OptimizeResult) -> None:
        x = np.asarray(intermediate_result.x, dtype=np.float64)
        trace.append({"theta": x.tolist(), "grad_norm": float(np.linalg.norm(jac(x)))})

    if not math.isfinite(fun(start)):
        raise MinimizerDivergedError("empirical loss is not finite at the starting point", [{"theta": start.tolist()}])
    result = minimize(
        fun,
        start,
        jac=jac,
        hess=hess,
        method="trust-exact",
        callback=record,
        options={"gtol": settings.MINIMIZER_GRAD_TOL, "maxiter": settings.MINIMIZER_MAX_ITERATIONS},
    )
    theta = np.asarray(result.x, dtype=np.float64)
    grad_norm = float(np.linalg.norm(jac(theta)))
    if not math.isfinite(grad_norm) or grad_norm > settings.MINIMIZER_GRAD_TOL:
        raise MinimizerDivergedError(str(result.message), trace or [{"theta": theta.tolist(), "grad_norm": grad_norm}])
    return MinimizerResult(
        theta=theta,
        method="trust-exact",
        grad_norm=grad_norm,
        iterations=int(result.nit),
        hessian_source="analytic" if loss.has_hess else "finite-difference",
    )
