"""Likelihood extraction for loss/η pairs that pass the diagnostic, and the reverse construction."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import logsumexp

from app.core.core_numerics import (
    AtomLosses,
    Dataset,
    FloatArray,
    LossModel,
    ParamGrid,
    PointwiseLoss,
    SampleGrid,
    ShiftFn,
    Temperature,
    log_mean_exp,
)

from ..config import DiagnosticSettings
from .diagnostic import DiagnosticReport, Verdict, partition_function_curve
from .exceptions import NotBeliefPosteriorError


@dataclass(frozen=True, eq=False, slots=True)
class LikelihoodTable:
    """p_θ(x_j) = exp{−η ℓ(θ, x_j)} / A on the sample grid (shift-free part of ℓ)."""

    params: ParamGrid
    log_density: FloatArray
    log_normalizer: float
    sample_grid: SampleGrid
    report: DiagnosticReport

    @property
    def normalizer(self) -> float:
        return math.exp(self.log_normalizer)

    @property
    def density(self) -> FloatArray:
        return np.exp(self.log_density)

    def row_masses(self) -> FloatArray:
        return np.exp(logsumexp(self.log_density + self.sample_grid.log_weights[None, :], axis=1))


def extract_likelihood(
    loss: LossModel,
    eta: Temperature | float,
    params: ParamGrid,
    xs: SampleGrid,
    *,
    settings: DiagnosticSettings | None = None,
) -> LikelihoodTable:
    temperature = Temperature.coerce(eta)
    report = partition_function_curve(loss, temperature, params, xs, settings=settings)
    if report.verdict is not Verdict.BELIEF:
        raise NotBeliefPosteriorError(report.verdict.value, report.max_rel_variation)
    log_a = log_mean_exp(report.log_A_unshifted)
    values = loss.evaluate(params, Dataset(records=xs.nodes)).values
    return LikelihoodTable(
        params=params,
        log_density=-temperature.eta * values - log_a,
        log_normalizer=log_a,
        sample_grid=xs,
        report=report,
    )


def implied_log_loss(loss: LossModel, eta: Temperature | float, table: LikelihoodTable, data: Dataset) -> AtomLosses:
    """Cumulative −log p_θ(x_t) = η ℓ(θ, x_t) + log A over *data*, for an update at η = 1."""
    temperature = Temperature.coerce(eta)
    matrix = loss.evaluate(table.params, data)
    return AtomLosses(
        values=temperature.eta * matrix.values.sum(axis=1),
        offset=data.size * table.log_normalizer,
    )


def affine_loss(
    log_density: PointwiseLoss,
    eta: Temperature | float,
    shift: ShiftFn | None = None,
    name: str = "affine-log-loss",
) -> LossModel:
    """ℓ(θ, x) = −(1/η) log p_θ(x) + c(x) for a normalized family ``log_density(atoms, records)``."""
    temperature = Temperature.coerce(eta)

    def pointwise(atoms: FloatArray, records: FloatArray) -> FloatArray:
        return -np.asarray(log_density(atoms, records), dtype=np.float64) / temperature.eta

    return LossModel(name=name, pointwise=pointwise, shift=shift)
