"""Moment losses for experiment models (``el-moment`` / ``et-moment``)."""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from app.shared.experiment import ConfigSemanticsError, LossSpec, ModelInputs, shift_function

from ..config import MomentSettings, get_moment_settings
from ..domain import AtomSolutions, Criterion, MomentModel, build_moment_model, solve_atoms


def moment_model_for(spec: LossSpec, column: int = 0) -> MomentModel:
    return build_moment_model(spec.moments, variance=spec.variance, column=column)


def criterion_for(spec: LossSpec) -> Criterion:
    if not spec.is_moment:
        raise ConfigSemanticsError("model.loss.name", f"'{spec.name}' ist kein Momentverlust.")
    return "el" if spec.name == "el-moment" else "et"


def moment_losses(
    inputs: ModelInputs,
    *,
    settings: MomentSettings | None = None,
    workers: int = 1,
) -> AtomSolutions:
    """Cumulative quasi-loss of a moment model, including its scale and data-only shift."""
    settings = settings or get_moment_settings()
    spec = inputs.spec.loss
    method = criterion_for(spec)
    data = inputs.require_data()
    solved = solve_atoms(
        method,
        moment_model_for(spec, data.outcome_column),
        inputs.grid,
        data,
        support=inputs.prior.support,
        scale=spec.scale * settings.QUASI_LOSS_SCALE,
        settings=settings,
        workers=workers,
    )
    solved.require_feasible(inputs.prior.support)
    if spec.shift.is_zero:
        return solved
    shifts = np.asarray(shift_function(spec.shift, data.outcome_column)(data.records), dtype=np.float64)
    offset = spec.scale * math.fsum(shifts.tolist())
    return dataclasses.replace(solved, losses=solved.losses.shifted(offset))
