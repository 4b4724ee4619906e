"""Command handler: ``recipe``."""

from __future__ import annotations

from app.core.core_extensions import CommandContext, CommandResult
from app.services.calibration.application import calibration_result, safebayes_result
from app.shared.experiment import RecipeSection, resolve_primary_model
from app.shared.schemas import weight_rows
from app.shared.utils import CsvTable

from ..domain import run_recipe_pipeline
from ..schemas import ChecklistRow, InterpretationStep, LossStep, RecipeReport, SeparabilityStep


def run_recipe(ctx: CommandContext) -> CommandResult:
    section = ctx.config.recipe or RecipeSection()
    inputs = resolve_primary_model(ctx.config)
    loss = inputs.require_loss()
    data = inputs.require_data()

    outcome = run_recipe_pipeline(
        inputs.prior,
        loss,
        data,
        calibration=section.calibration,
        eta_grid=section.eta_grid,
        blocks=section.blocks,
        sample_grid=section.sample_grid.build() if section.sample_grid is not None else None,
        shifted=not inputs.spec.loss.shift.is_zero,
        workers=ctx.workers,
    )
    result = outcome.update.result
    separability = outcome.separability
    diagnostic = outcome.diagnostic

    report = RecipeReport(
        claim="loss choice, separability and a calibrated η together fix a scale-canonical Gibbs update",
        model_id=inputs.model_id,
        n=data.size,
        loss=LossStep(
            name=outcome.loss.name,
            scale=outcome.loss.scale,
            units=outcome.loss.units,
            has_gradient=outcome.loss.has_gradient,
            shifted=outcome.loss.shifted,
        ),
        separability=SeparabilityStep(
            penalty=separability.penalty,
            product_gap=separability.product_gap,
            block_divergence=separability.block_divergence,
            blocks=separability.blocks,
            batching_tv=separability.batching_tv,
            batching_log_Z_difference=separability.batching_log_Z_difference,
            coherent=separability.coherent,
        ),
        calibration=calibration_result(outcome.update.calibration),
        safebayes=safebayes_result(outcome.update.safebayes) if outcome.update.safebayes is not None else None,
        interpretation=None
        if diagnostic is None
        else InterpretationStep(
            verdict=diagnostic.verdict.value,
            max_rel_variation=diagnostic.max_rel_variation,
            caveat=diagnostic.caveat,
        ),
        eta=result.eta.eta,
        log_Z=result.log_normalizer,
        anchored_log_Z=result.anchored_log_normalizer,
        posterior=weight_rows(result.posterior),
        checklist=[ChecklistRow(item=entry.item, value=entry.value) for entry in outcome.checklist],
    )
    tables = {
        "checklist": CsvTable(columns=("item", "value"), rows=[(e.item, e.value) for e in outcome.checklist]),
        "posterior": CsvTable(
            columns=("atom", "label", "prior", "posterior"),
            rows=[
                (i, inputs.grid.label(i), float(inputs.prior.weights[i]), float(result.posterior.weights[i]))
                for i in range(inputs.grid.size)
            ],
        ),
    }
    return CommandResult(report=report, tables=tables)
