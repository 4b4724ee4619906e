"""Command handler: ``score``."""

from __future__ import annotations

import numpy as np

from app.core.core_extensions import CommandContext, CommandResult
from app.core.core_numerics import Temperature
from app.shared.experiment import (
    ConfigSemanticsError,
    ModelInputs,
    ScoreSection,
    build_family,
    resolve_models,
    shift_function,
)
from app.shared.predictive import PredictiveFamily
from app.shared.utils import CsvTable

from ..config import get_scoring_settings
from ..domain import ScoreTrace, ScoringRule, delta_lpd, heldout_score, prequential_score
from ..schemas import DeltaRow, HeldoutRow, ModelScores, ScoreReport, ShiftInvarianceRow, TraceSummary


def _family(inputs: ModelInputs) -> tuple[str, PredictiveFamily]:
    spec = inputs.spec.family
    if spec is None:
        raise ConfigSemanticsError(
            f"models[{inputs.model_id}].family", "Für das Scoring muss eine prädiktive Familie angegeben werden."
        )
    return spec.name, build_family(spec, inputs.grid, mass_tol=get_scoring_settings().PREDICTIVE_MASS_TOL)


def _summary(trace: ScoreTrace) -> TraceSummary:
    return TraceSummary(
        rule=trace.rule,
        n=trace.length,
        cumulative=trace.cumulative,
        infinite_steps=list(trace.infinite_steps),
        snapped_steps=list(trace.snapped_steps),
    )


def run_score(ctx: CommandContext) -> CommandResult:
    section = ctx.config.score or ScoreSection()
    settings = get_scoring_settings()
    eta = Temperature(ctx.config.eta)
    rules: list[ScoringRule] = list(section.rules)

    models: list[ModelScores] = []
    traces: dict[str, dict[ScoringRule, ScoreTrace]] = {}
    tables: dict[str, CsvTable] = {}
    for inputs in resolve_models(ctx.config):
        loss = inputs.require_loss()
        data = inputs.require_data()
        family_name, family = _family(inputs)
        by_rule = {
            rule: prequential_score(inputs.prior, loss, eta, family, data, rule, settings=settings) for rule in rules
        }
        traces[inputs.model_id] = by_rule
        for rule, trace in by_rule.items():
            tables[f"{inputs.model_id}_{rule}"] = trace.to_table()

        invariance: list[ShiftInvarianceRow] | None = None
        if section.compare_shift is not None:
            shifted = loss.shifted(shift_function(section.compare_shift, data.outcome_column))
            invariance = []
            for rule, trace in by_rule.items():
                other = prequential_score(inputs.prior, shifted, eta, family, data, rule, settings=settings)
                invariance.append(
                    ShiftInvarianceRow(
                        rule=rule,
                        max_abs_step_difference=float(np.abs(other.per_step_scores - trace.per_step_scores).max()),
                        cumulative_difference=delta_lpd(other, trace),
                    )
                )

        heldout: list[HeldoutRow] | None = None
        if section.train is not None and section.test is not None:
            heldout = []
            for rule in rules:
                result = heldout_score(
                    inputs.prior, loss, eta, family, data, section.train, section.test, rule, settings=settings
                )
                heldout.append(HeldoutRow(rule=rule, n_train=len(result.train), n_test=len(result.test), total=result.total))

        models.append(
            ModelScores(
                model_id=inputs.model_id,
                family=family_name,
                traces=[_summary(trace) for trace in by_rule.values()],
                shift_invariance=invariance,
                heldout=heldout,
            )
        )

    reference = models[0].model_id
    deltas = [
        DeltaRow(
            rule=rule,
            model_1=model.model_id,
            model_0=reference,
            delta=delta_lpd(traces[model.model_id][rule], traces[reference][rule]),
        )
        for model in models[1:]
        for rule in rules
    ]
    report = ScoreReport(
        claim="prequential scores of induced predictives are unchanged by data-only loss shifts",
        eta=eta.eta,
        models=models,
        deltas=deltas,
    )
    return CommandResult(report=report, tables=tables)