"""Built-in per-datum loss catalog (1-d parameter, scalar outcome)."""

from __future__ import annotations

import math

import numpy as np
from scipy.special import xlog1py, xlogy

from app.core.core_numerics import FloatArray, LossModel, ShiftFn

from .config import LossSpec, ShiftSpec
from .exceptions import ConfigSemanticsError


def _theta(atoms: FloatArray) -> FloatArray:
    return np.asarray(atoms, dtype=np.float64)[:, :1]


def _y_row(records: FloatArray, column: int) -> FloatArray:
    return np.asarray(records, dtype=np.float64)[:, column][None, :]


def _y_col(records: FloatArray, column: int) -> FloatArray:
    return np.asarray(records, dtype=np.float64)[:, column][:, None]


def gaussian_loglik(sigma: float = 1.0, column: int = 0) -> LossModel:
    """−log N(y; θ, σ²)."""
    log_norm = 0.5 * math.log(2.0 * math.pi * sigma**2)
    inv_var = 1.0 / sigma**2

    def pointwise(atoms: FloatArray, records: FloatArray) -> FloatArray:
        return 0.5 * inv_var * (_y_row(records, column) - _theta(atoms)) ** 2 + log_norm

    def grad(theta: FloatArray, records: FloatArray) -> FloatArray:
        return -inv_var * (_y_col(records, column) - theta[0])

    def hess(theta: FloatArray, records: FloatArray) -> FloatArray:
        return np.full((records.shape[0], 1, 1), inv_var)

    return LossModel(name="gaussian-loglik", pointwise=pointwise, grad=grad, hess=hess)


def gaussian_scale(column: int = 0) -> LossModel:
    """y²/(2σ²) with θ = σ and no log σ term, so the partition function grows like σ."""

    def pointwise(atoms: FloatArray, records: FloatArray) -> FloatArray:
        sigma = _theta(atoms)
        with np.errstate(divide="ignore"):
            values = _y_row(records, column) ** 2 / (2.0 * sigma**2)
        return np.where(sigma > 0, values, np.inf)

    def grad(theta: FloatArray, records: FloatArray) -> FloatArray:
        return -(_y_col(records, column) ** 2) / theta[0] ** 3

    def hess(theta: FloatArray, records: FloatArray) -> FloatArray:
        return (3.0 * _y_col(records, column) ** 2 / theta[0] ** 4)[:, :, None]

    return LossModel(name="gaussian-scale", pointwise=pointwise, grad=grad, hess=hess)


def bernoulli_loglik(column: int = 0) -> LossModel:
    """−[y log θ + (1 − y) log(1 − θ)]; +∞ outside [0, 1] or on impossible outcomes."""

    def pointwise(atoms: FloatArray, records: FloatArray) -> FloatArray:
        theta = _theta(atoms)
        y = _y_row(records, column)
        inside = (theta >= 0) & (theta <= 1)
        clipped = np.clip(theta, 0.0, 1.0)
        with np.errstate(divide="ignore"):
            values = -(xlogy(y, clipped) + xlog1py(1.0 - y, -clipped))
        return np.where(inside, values, np.inf)

    def grad(theta: FloatArray, records: FloatArray) -> FloatArray:
        y = _y_col(records, column)
        t = theta[0]
        return -y / t + (1.0 - y) / (1.0 - t)

    def hess(theta: FloatArray, records: FloatArray) -> FloatArray:
        y = _y_col(records, column)
        t = theta[0]
        return (y / t**2 + (1.0 - y) / (1.0 - t) ** 2)[:, :, None]

    return LossModel(name="bernoulli-loglik", pointwise=pointwise, grad=grad, hess=hess)


def squared(column: int = 0) -> LossModel:
    """(y − θ)²/2."""

    def pointwise(atoms: FloatArray, records: FloatArray) -> FloatArray:
        return 0.5 * (_y_row(records, column) - _theta(atoms)) ** 2

    def grad(theta: FloatArray, records: FloatArray) -> FloatArray:
        return -(_y_col(records, column) - theta[0])

    def hess(theta: FloatArray, records: FloatArray) -> FloatArray:
        return np.ones((records.shape[0], 1, 1))

    return LossModel(name="squared", pointwise=pointwise, grad=grad, hess=hess)


def check(tau: float = 0.5, column: int = 0) -> LossModel:
    """Quantile (pinball) loss (y − θ)(τ − 1{y < θ}); not differentiable at y = θ, so no oracles."""

    def pointwise(atoms: FloatArray, records: FloatArray) -> FloatArray:
        residual = _y_row(records, column) - _theta(atoms)
        return residual * (tau - (residual < 0))

    return LossModel(name="check", pointwise=pointwise)


def shift_function(shift: ShiftSpec, column: int = 0) -> ShiftFn:
    def c(records: FloatArray) -> FloatArray:
        return shift.constant + shift.linear * np.asarray(records, dtype=np.float64)[:, column]

    return c


def build_loss_model(spec: LossSpec, column: int = 0) -> LossModel:
    """Catalog entry for *spec* with its scale and data-only shift applied."""
    match spec.name:
        case "gaussian-loglik":
            loss = gaussian_loglik(spec.sigma, column)
        case "gaussian-scale":
            loss = gaussian_scale(column)
        case "bernoulli-loglik":
            loss = bernoulli_loglik(column)
        case "squared":
            loss = squared(column)
        case "check":
            loss = check(spec.tau, column)
        case _:
            raise ConfigSemanticsError(
                "model.loss.name",
                f"'{spec.name}' ist ein datensatzweiter Momentverlust und hat keine Form pro Datum.",
            )
    if spec.scale != 1.0:
        loss = loss.scaled(spec.scale)
    if not spec.shift.is_zero:
        loss = loss.shifted(shift_function(spec.shift, column))
    return loss
