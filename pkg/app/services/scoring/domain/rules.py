"""Proper scoring rules on grid predictives."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
import numpy.typing as npt

from app.core.core_messages import MessageKeys, msg
from app.shared.predictive import Predictive

from ..config import ScoringSettings, get_scoring_settings

logger = logging.getLogger("app_logger")

ScoringRule = Literal["log", "crps"]


@dataclass(frozen=True, slots=True)
class StepScore:
    value: float
    snapped: bool = False

    @property
    def infinite(self) -> bool:
        return math.isinf(self.value)


def _log_score(predictive: Predictive, y: float, step: int | None, settings: ScoringSettings) -> StepScore:
    grid = predictive.grid
    index, snapped = grid.locate(y, settings.SCORING_SNAP_FRACTION, step)
    if snapped:
        logger.info(msg.get(MessageKeys.SCORING_OUTCOME_SNAPPED, y=y, node=float(grid.nodes[index]), step=step))
    value = float(predictive.values[index])
    if value <= 0.0:
        logger.warning(msg.get(MessageKeys.SCORING_ZERO_MASS, y=y, step=step))
        return StepScore(-math.inf, snapped)
    return StepScore(math.log(value), snapped)


def _crps(predictive: Predictive, y: float) -> float:
    grid = predictive.grid
    grid.require_sorted()
    cdf = np.cumsum(predictive.values * grid.weights)
    indicator = (grid.nodes >= y).astype(np.float64)
    return float(np.sum(grid.weights * (cdf - indicator) ** 2))


def log_score(
    predictive: Predictive, y: float, *, step: int | None = None, settings: ScoringSettings | None = None
) -> float:
    """log P(y); −∞ (logged) where the predictive has no mass."""
    return _log_score(predictive, y, step, settings or get_scoring_settings()).value


def crps(predictive: Predictive, y: float) -> float:
    """Σ_j w_j (F(z_j) − 1{z_j ≥ y})² with F accumulated on the sorted outcome grid."""
    return _crps(predictive, y)


def score_step(
    predictive: Predictive,
    y: float,
    rule: ScoringRule,
    *,
    step: int | None = None,
    settings: ScoringSettings | None = None,
) -> StepScore:
    if rule == "log":
        return _log_score(predictive, y, step, settings or get_scoring_settings())
    return StepScore(_crps(predictive, y))


def expected_score(predictive: Predictive, truth: npt.ArrayLike, rule: ScoringRule) -> float:
    """E_{y∼truth} score(P, y) for a truth given as masses on the predictive's outcome nodes.

    Log score is positively oriented, CRPS negatively; propriety means the
    truth maximizes the former and minimizes the latter.
    """
    masses = np.asarray(truth, dtype=np.float64).reshape(-1)
    nodes = predictive.grid.nodes
    if rule == "log":
        with np.errstate(divide="ignore"):
            logs = np.log(predictive.values)
        active = masses > 0
        return float(np.sum(masses[active] * logs[active]))
    return float(sum(m * _crps(predictive, float(y)) for m, y in zip(masses, nodes, strict=True) if m > 0))
