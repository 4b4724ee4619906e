"""SafeBayes-style learning-rate selection by cumulative prequential loss.

The default criterion scores each η by the posterior-expected log-loss of the
likelihood the update at η implies, exp{−η ℓ(θ, x)} / A_η(θ), with A_η taken
on a sample grid. Under a well-specified log-likelihood that is the model
itself at η = 1; a heavier-tailed truth rewards the flatter density of a
smaller η. The raw posterior-expected loss is kept as ``expected-loss``.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np
import numpy.typing as npt

from app.core.core_gibbs import prequential_posteriors
from app.core.core_messages import MessageKeys, msg
from app.core.core_numerics import Dataset, Distribution, FloatArray, LossModel, ParamGrid, SampleGrid, Temperature
from app.services.bayesianity.domain import log_partition
from app.services.scoring.domain import prequential_score
from app.shared.experiment import ConfigSemanticsError
from app.shared.predictive import PredictiveFamily
from app.shared.utils import parallel_map

from ..config import CalibrationSettings, get_calibration_settings
from .information import CalibrationReport, information_matrices
from .minimizer import HessianSource, loss_minimizer

logger = logging.getLogger("app_logger")

SafeBayesCriterion = Literal["implied-log-loss", "expected-loss", "predictive-log-loss"]


@dataclass(frozen=True, eq=False, slots=True)
class SafeBayesReport:
    """Per-η criteria in ascending η order.

    ``excess_criteria`` drop the data-only offsets, which are the same for
    every η; selection is made on them. Only ``expected-loss`` has a nonzero
    ``offset_total``.
    """

    eta_star: Temperature
    etas: tuple[float, ...]
    criteria: FloatArray
    excess_criteria: FloatArray
    offset_total: float
    criterion: SafeBayesCriterion


def _expected_loss(prior: Distribution, loss: LossModel, data: Dataset, eta: float) -> float:
    matrix = loss.evaluate(prior.grid, data, support=prior.support)
    posteriors = prequential_posteriors(prior, matrix, eta)
    terms = []
    for t, result in enumerate(posteriors):
        weights = result.posterior.weights
        active = weights > 0
        terms.append(float(weights[active] @ matrix.values[active, t]))
    return math.fsum(terms)


def _implied_log_loss(prior: Distribution, loss: LossModel, data: Dataset, xs: SampleGrid, eta: float) -> float:
    matrix = loss.evaluate(prior.grid, data, support=prior.support)
    log_a = log_partition(loss, eta, prior.grid, xs, support=prior.support)
    posteriors = prequential_posteriors(prior, matrix, eta)
    terms = []
    for t, result in enumerate(posteriors):
        weights = result.posterior.weights
        active = weights > 0
        terms.append(float(weights[active] @ (eta * matrix.values[active, t] + log_a[active])))
    return math.fsum(terms)


def _predictive_log_loss(
    prior: Distribution, loss: LossModel, family: PredictiveFamily, data: Dataset, eta: float
) -> float:
    return -prequential_score(prior, loss, eta, family, data, "log").cumulative


def _select(etas: Sequence[float], excess: FloatArray, tie_tol: float) -> int:
    finite = np.isfinite(excess)
    if not finite.any():
        return 0
    best = float(excess[finite].min())
    threshold = best + tie_tol * max(1.0, abs(best))
    # etas ascend, so the first index within tolerance is the smallest η
    return int(np.flatnonzero(finite & (excess <= threshold))[0])


def safebayes_select(
    prior: Distribution,
    loss: LossModel,
    data: Dataset,
    eta_grid: Sequence[Temperature | float],
    *,
    family: PredictiveFamily | None = None,
    sample_grid: SampleGrid | None = None,
    criterion: SafeBayesCriterion = "implied-log-loss",
    settings: CalibrationSettings | None = None,
    workers: int = 1,
) -> SafeBayesReport:
    """η* = argmin over *eta_grid* of the cumulative prequential *criterion*; ties go to the smaller η.

    ``implied-log-loss``: Σ_t E_{q_t}[η ℓ(θ; x_t) + log A_η(θ)], needs *sample_grid*.
    ``expected-loss``: Σ_t E_{q_t}[ℓ(θ; x_t)].
    ``predictive-log-loss``: −Σ_t log P_t(y_t), needs *family*.
    """
    settings = settings or get_calibration_settings()
    etas = tuple(sorted({Temperature.coerce(eta).eta for eta in eta_grid}))
    if not etas:
        raise ConfigSemanticsError("calibrate.eta_grid", "Das η-Gitter für SafeBayes ist leer.")

    if criterion == "predictive-log-loss":
        if family is None:
            raise ConfigSemanticsError("calibrate.criterion", "Das Kriterium 'predictive-log-loss' braucht eine prädiktive Familie.")
        chosen_family = family
        excess = np.array(
            parallel_map(lambda eta: _predictive_log_loss(prior, loss, chosen_family, data, eta), etas, workers)
        )
        offset_total = 0.0
    elif criterion == "implied-log-loss":
        if sample_grid is None:
            raise ConfigSemanticsError(
                "calibrate.sample_grid", "Das Kriterium 'implied-log-loss' braucht ein Stichprobengitter."
            )
        xs = sample_grid
        excess = np.array(parallel_map(lambda eta: _implied_log_loss(prior, loss, data, xs, eta), etas, workers))
        offset_total = 0.0
    else:
        excess = np.array(parallel_map(lambda eta: _expected_loss(prior, loss, data, eta), etas, workers))
        offset_total = math.fsum(loss.evaluate(prior.grid, data, support=prior.support).column_offsets.tolist())

    index = _select(etas, excess, settings.SAFEBAYES_TIE_TOL)
    logger.info(msg.get(MessageKeys.CALIBRATION_SAFEBAYES_SELECTED, eta=etas[index], count=len(etas)))
    return SafeBayesReport(
        eta_star=Temperature(etas[index]),
        etas=etas,
        criteria=excess + offset_total,
        excess_criteria=excess,
        offset_total=offset_total,
        criterion=criterion,
    )


def safebayes_calibration(
    selection: SafeBayesReport,
    loss: LossModel,
    data: Dataset,
    init: npt.ArrayLike | None = None,
    *,
    grid: ParamGrid | None = None,
    settings: CalibrationSettings | None = None,
) -> CalibrationReport:
    """CalibrationReport for a SafeBayes choice; Î and Ĵ only when a gradient exists."""
    found = loss_minimizer(loss, data, init, grid=grid, settings=settings)
    info: FloatArray | None = None
    jmat: FloatArray | None = None
    source: HessianSource | None = None
    if loss.has_grad:
        info, jmat, source = information_matrices(loss, found.theta, data, settings)
    return CalibrationReport(
        eta_hat=selection.eta_star,
        theta_hat=found.theta,
        I_hat=info,
        J_hat=jmat,
        method="safebayes",
        n=data.size,
        minimizer=found,
        hessian_source=source,
    )
