"""Command handler: ``calibrate``."""

from __future__ import annotations

from app.core.core_extensions import CommandContext, CommandResult
from app.core.core_gibbs import gibbs_update
from app.services.scoring.config import get_scoring_settings
from app.shared.experiment import CalibrateSection, build_family, resolve_primary_model
from app.shared.schemas import weight_rows
from app.shared.utils import CsvTable

from ..config import get_calibration_settings
from ..domain import CalibrationReport, SafeBayesReport, info_matching_eta, safebayes_calibration, safebayes_select
from ..schemas import CalibrateReport, CalibrationResult, MinimizerSummary, SafeBayesResult, SafeBayesRow


def calibration_result(report: CalibrationReport) -> CalibrationResult:
    found = report.minimizer
    return CalibrationResult(
        method=report.method,
        eta_hat=report.eta_hat.eta,
        theta_hat=report.theta_hat.tolist(),
        I_hat=report.I_hat.tolist() if report.I_hat is not None else None,
        J_hat=report.J_hat.tolist() if report.J_hat is not None else None,
        minimizer=None
        if found is None
        else MinimizerSummary(
            method=found.method,
            iterations=found.iterations,
            grad_norm=found.grad_norm,
            hessian_source=found.hessian_source,
        ),
    )


def safebayes_result(selection: SafeBayesReport) -> SafeBayesResult:
    return SafeBayesResult(
        criterion=selection.criterion,
        eta_star=selection.eta_star.eta,
        offset_total=selection.offset_total,
        rows=[
            SafeBayesRow(eta=eta, criterion=float(total), excess_criterion=float(excess))
            for eta, total, excess in zip(selection.etas, selection.criteria, selection.excess_criteria, strict=True)
        ],
    )


def run_calibrate(ctx: CommandContext) -> CommandResult:
    section = ctx.config.calibrate or CalibrateSection()
    settings = get_calibration_settings()
    inputs = resolve_primary_model(ctx.config)
    loss = inputs.require_loss()
    data = inputs.require_data()

    calibrations: list[CalibrationReport] = []
    if section.method in ("info-matching", "both"):
        calibrations.append(info_matching_eta(loss, data, section.init, grid=inputs.grid, settings=settings))

    selection: SafeBayesReport | None = None
    if section.method in ("safebayes", "both"):
        family_spec = inputs.spec.family
        family = (
            build_family(family_spec, inputs.grid, mass_tol=get_scoring_settings().PREDICTIVE_MASS_TOL)
            if family_spec is not None
            else None
        )
        selection = safebayes_select(
            inputs.prior,
            loss,
            data,
            section.eta_grid,
            family=family,
            sample_grid=section.sample_grid.build() if section.sample_grid is not None else None,
            criterion=section.criterion,
            settings=settings,
            workers=ctx.workers,
        )
        calibrations.append(
            safebayes_calibration(selection, loss, data, section.init, grid=inputs.grid, settings=settings)
        )

    chosen = calibrations[0].eta_hat
    posterior = gibbs_update(inputs.prior, inputs.cumulative_losses(), chosen).posterior

    tables = {
        "posterior": CsvTable(
            columns=("atom", "label", "prior", "posterior"),
            rows=[
                (i, inputs.grid.label(i), float(inputs.prior.weights[i]), float(posterior.weights[i]))
                for i in range(inputs.grid.size)
            ],
        )
    }
    if selection is not None:
        tables["safebayes"] = CsvTable(
            columns=("eta", "criterion", "excess_criterion"),
            rows=[
                (eta, float(total), float(excess))
                for eta, total, excess in zip(selection.etas, selection.criteria, selection.excess_criteria, strict=True)
            ],
        )

    report = CalibrateReport(
        claim="the calibrated learning rate ignores data-only shifts and rescales as 1/a when the loss is scaled by a",
        model_id=inputs.model_id,
        n=data.size,
        method=section.method,
        eta_hat=chosen.eta,
        calibrations=[calibration_result(c) for c in calibrations],
        safebayes=safebayes_result(selection) if selection is not None else None,
        posterior=weight_rows(posterior),
    )
    return CommandResult(report=report, tables=tables)
