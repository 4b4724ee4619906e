"""Prequential scoring of induced predictives and ΔLPD."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from app.core.core_gibbs import gibbs_update, prequential_posteriors
from app.core.core_numerics import Dataset, Distribution, FloatArray, LossModel, Temperature
from app.shared.predictive import PredictiveFamily, induced_predictive
from app.shared.utils import CsvTable

from ..config import ScoringSettings, get_scoring_settings
from .exceptions import TraceMismatchError
from .rules import ScoringRule, StepScore, score_step


@dataclass(frozen=True, eq=False, slots=True)
class ScoreTrace:
    rule: ScoringRule
    per_step_scores: FloatArray
    snapped_steps: tuple[int, ...] = field(default_factory=tuple)

    @classmethod
    def from_steps(cls, rule: ScoringRule, steps: Sequence[StepScore]) -> ScoreTrace:
        return cls(
            rule=rule,
            per_step_scores=np.array([s.value for s in steps], dtype=np.float64),
            snapped_steps=tuple(t + 1 for t, s in enumerate(steps) if s.snapped),
        )

    @property
    def length(self) -> int:
        return int(self.per_step_scores.size)

    @property
    def cumulative(self) -> float:
        return math.fsum(self.per_step_scores.tolist())

    @property
    def infinite_steps(self) -> tuple[int, ...]:
        return tuple(int(t) + 1 for t in np.flatnonzero(np.isinf(self.per_step_scores)))

    def running_cumulative(self) -> FloatArray:
        return np.cumsum(self.per_step_scores)

    def to_table(self) -> CsvTable:
        running = self.running_cumulative()
        return CsvTable(
            columns=("t", "score", "cumulative"),
            rows=[(t + 1, float(self.per_step_scores[t]), float(running[t])) for t in range(self.length)],
        )


def prequential_score(
    prior: Distribution,
    loss: LossModel,
    eta: Temperature | float,
    family: PredictiveFamily,
    data: Dataset,
    rule: ScoringRule,
    *,
    settings: ScoringSettings | None = None,
) -> ScoreTrace:
    """Score y_t under the predictive induced by q_t = q(· | x_1..x_{t−1}); q_1 is the prior."""
    settings = settings or get_scoring_settings()
    matrix = loss.evaluate(prior.grid, data, support=prior.support)
    posteriors = prequential_posteriors(prior, matrix, eta)
    outcomes = data.outcomes
    steps = [
        score_step(induced_predictive(result.posterior, family), float(outcomes[t]), rule, step=t + 1, settings=settings)
        for t, result in enumerate(posteriors)
    ]
    return ScoreTrace.from_steps(rule, steps)


def delta_lpd(trace_1: ScoreTrace, trace_0: ScoreTrace) -> float:
    """cumulative₁ − cumulative₀ for traces of the same rule and length."""
    if trace_1.rule != trace_0.rule or trace_1.length != trace_0.length:
        raise TraceMismatchError((trace_1.rule, trace_1.length), (trace_0.rule, trace_0.length))
    return trace_1.cumulative - trace_0.cumulative


@dataclass(frozen=True, eq=False, slots=True)
class HeldoutScore:
    rule: ScoringRule
    train: tuple[int, ...]
    test: tuple[int, ...]
    scores: FloatArray

    @property
    def total(self) -> float:
        return math.fsum(self.scores.tolist())


def heldout_score(
    prior: Distribution,
    loss: LossModel,
    eta: Temperature | float,
    family: PredictiveFamily,
    data: Dataset,
    train: Sequence[int],
    test: Sequence[int],
    rule: ScoringRule,
    *,
    settings: ScoringSettings | None = None,
) -> HeldoutScore:
    """Posterior on the train indices, scored on each test index."""
    settings = settings or get_scoring_settings()
    if train:
        losses = loss.evaluate(prior.grid, data.subset(list(train)), support=prior.support).cumulative()
        posterior = gibbs_update(prior, losses, eta).posterior
    else:
        posterior = prior
    predictive = induced_predictive(posterior, family)
    outcomes = data.subset(list(test)).outcomes
    scores = [score_step(predictive, float(y), rule, step=int(i) + 1, settings=settings).value for i, y in zip(test, outcomes, strict=True)]
    return HeldoutScore(rule=rule, train=tuple(train), test=tuple(test), scores=np.array(scores, dtype=np.float64))
