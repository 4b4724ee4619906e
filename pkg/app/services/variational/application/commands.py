"""Command handlers: ``variational``, ``additivity`` and ``vnm``."""

from __future__ import annotations

import numpy as np

from app.core.core_extensions import CommandContext, CommandResult
from app.core.core_gibbs import gibbs_update, optimal_value
from app.core.core_numerics import AtomLosses, Distribution, ParamGrid, Temperature, total_variation
from app.shared.experiment import (
    AdditivitySection,
    ConfigSemanticsError,
    DivergenceConfig,
    VariationalSection,
    VnmSection,
    resolve_primary_model,
)
from app.shared.schemas import weight_rows
from app.shared.utils import CsvTable, parallel_map, table_from_columns

from ..domain import (
    DivergenceSpec,
    brute_force_two_atom,
    get_divergence,
    is_vnm_rationalizable,
    maximize_linear_utility,
    product_additivity_gap,
    solve_penalized,
    vnm_optimal_rule,
)
from ..schemas import (
    AdditivityGap,
    AdditivityReport,
    BruteForceCheck,
    RandomGapSummary,
    RandomVnmSummary,
    UtilityCheck,
    VariationalReport,
    VnmReport,
)

ADDITIVITY_TOL = 1e-12


def _divergence(config: DivergenceConfig) -> DivergenceSpec:
    return get_divergence(config.name, c=config.c, a=config.a)


def _baseline_and_losses(ctx: CommandContext, section: VariationalSection) -> tuple[str, Distribution, AtomLosses]:
    config = ctx.config
    if section.losses is not None:
        if config.all_models():
            inputs = resolve_primary_model(config)
            return inputs.model_id, inputs.prior, AtomLosses(values=np.asarray(section.losses))
        grid = ParamGrid.from_points(np.arange(len(section.losses), dtype=np.float64))
        return "inline", Distribution.uniform(grid), AtomLosses(values=np.asarray(section.losses))
    inputs = resolve_primary_model(config)
    return inputs.model_id, inputs.prior, inputs.cumulative_losses()


def run_variational(ctx: CommandContext) -> CommandResult:
    section = ctx.config.variational or VariationalSection()
    div = _divergence(section.divergence)
    eta = Temperature(ctx.config.eta)
    model_id, baseline, losses = _baseline_and_losses(ctx, section)

    solved = solve_penalized(baseline, losses, eta, div, section.tol)
    gibbs = gibbs_update(baseline, losses, eta)
    gibbs_value = optimal_value(gibbs, eta)

    brute: BruteForceCheck | None = None
    if section.brute_force and baseline.grid.size == 2:
        oracle, oracle_value = brute_force_two_atom(baseline, losses, eta, div)
        brute = BruteForceCheck(
            weights=[float(w) for w in oracle.weights],
            objective=oracle_value,
            tv_to_solver=total_variation(oracle, solved.solution),
        )

    report = VariationalReport(
        claim="the Gibbs posterior minimizes expected loss plus a KL penalty; other divergences give other rules",
        model_id=model_id,
        divergence=div.name,
        divergence_params=dict(div.params),
        eta=eta.eta,
        converged=solved.converged,
        iterations=solved.iterations,
        objective=solved.objective,
        kkt_residual=solved.kkt_residual,
        final_step_norm=solved.final_step_norm,
        solution=weight_rows(solved.solution),
        gibbs_tv=total_variation(solved.solution, gibbs.posterior),
        gibbs_optimal_value=gibbs_value,
        objective_minus_gibbs_value=solved.objective - gibbs_value,
        brute_force=brute,
    )
    grid = baseline.grid
    table = table_from_columns(
        atom=list(range(grid.size)),
        label=[grid.label(i) for i in range(grid.size)],
        loss=[float(v) for v in losses.total],
        baseline=[float(w) for w in baseline.weights],
        solution=[float(w) for w in solved.solution.weights],
        gibbs=[float(w) for w in gibbs.posterior.weights],
    )
    return CommandResult(report=report, tables={"weights": table})


def _on_index_grid(weights: list[float]) -> Distribution:
    grid = ParamGrid.from_points(np.arange(len(weights), dtype=np.float64))
    return Distribution.from_weights(grid, weights)


def _random_instance(seed: int) -> tuple[Distribution, Distribution, Distribution, Distribution]:
    rng = np.random.default_rng(seed)
    sizes = rng.integers(2, 6, size=2)
    dists = []
    for size in (sizes[0], sizes[0], sizes[1], sizes[1]):
        grid = ParamGrid.from_points(np.arange(int(size), dtype=np.float64))
        dists.append(Distribution.from_weights(grid, rng.dirichlet(np.ones(int(size)))))
    return dists[0], dists[1], dists[2], dists[3]


def run_additivity(ctx: CommandContext) -> CommandResult:
    section = ctx.config.additivity or AdditivitySection()
    divergences = [_divergence(item) for item in section.divergences]
    q1, p1, q2, p2 = (_on_index_grid(w) for w in (section.q1, section.p1, section.q2, section.p2))

    canonical = [
        AdditivityGap(divergence=div.name, gap=gap, additive=abs(gap) <= ADDITIVITY_TOL)
        for div in divergences
        for gap in [product_additivity_gap(div, q1, p1, q2, p2)]
    ]

    rows: list[tuple[str, int, float]] = [(item.divergence, -1, item.gap) for item in canonical]
    random: list[RandomGapSummary] = []
    if section.random_instances:
        if section.seed is None:
            raise ConfigSemanticsError("additivity.seed", "Zufallsinstanzen brauchen einen Seed (Konfiguration oder --seed).")
        seeds = np.random.SeedSequence(section.seed).generate_state(section.random_instances).tolist()
        instances = parallel_map(_random_instance, seeds, ctx.workers)
        for div in divergences:
            gaps = [product_additivity_gap(div, *instance) for instance in instances]
            rows.extend((div.name, index, gap) for index, gap in enumerate(gaps))
            random.append(
                RandomGapSummary(
                    divergence=div.name,
                    instances=len(gaps),
                    max_abs_gap=max(abs(g) for g in gaps),
                    additive_instances=sum(abs(g) <= ADDITIVITY_TOL for g in gaps),
                )
            )

    report = AdditivityReport(
        claim="among f-divergences only the KL family splits additively over independent products",
        canonical_q=list(section.q1),
        canonical_p=list(section.p1),
        tolerance=ADDITIVITY_TOL,
        canonical=canonical,
        random=random,
    )
    table = CsvTable(columns=("divergence", "instance", "gap"), rows=list(rows))
    return CommandResult(report=report, tables={"gaps": table})


def _random_utilities(seed: int, size: int) -> np.ndarray:
    return np.random.default_rng(seed).normal(size=size)


def run_vnm(ctx: CommandContext) -> CommandResult:
    section = ctx.config.vnm or VnmSection()
    if section.utilities is None and not section.random_instances:
        raise ConfigSemanticsError("vnm.utilities", "Nutzenvektor oder Zufallsinstanzen angeben.")
    if section.random_instances and section.seed is None:
        raise ConfigSemanticsError("vnm.seed", "Zufallsinstanzen brauchen einen Seed (Konfiguration oder --seed).")

    utilities = (
        np.asarray(section.utilities, dtype=np.float64)
        if section.utilities is not None
        else _random_utilities(section.seed or 0, section.size)
    )
    rule, argmax = vnm_optimal_rule(utilities)
    maximized = maximize_linear_utility(utilities, rule.grid)
    uniform_on_argmax = Distribution.from_weights(rule.grid, np.isin(np.arange(utilities.size), argmax).astype(float))

    random: RandomVnmSummary | None = None
    if section.random_instances:
        seeds = np.random.SeedSequence(section.seed).generate_state(section.random_instances).tolist()
        reports = parallel_map(
            lambda s: maximize_linear_utility(_random_utilities(s, section.size)), seeds, ctx.workers
        )
        random = RandomVnmSummary(
            instances=len(reports),
            point_masses=sum(r.converged for r in reports),
        )

    report = VnmReport(
        claim="linear expected-utility objectives are maximized by point masses on the argmax set",
        utilities=[float(u) for u in utilities],
        argmax=list(argmax),
        optimal_rule=[float(w) for w in rule.weights],
        point_mass_value=float(np.dot(rule.weights, utilities)),
        uniform_over_argmax_value=float(np.dot(uniform_on_argmax.weights, utilities)),
        maximizer=UtilityCheck(
            max_weight=maximized.max_weight,
            residual_mass=maximized.residual_mass,
            iterations=maximized.iterations,
            converged=maximized.converged,
            value=maximized.value,
            rationalizable=is_vnm_rationalizable(maximized.solution, utilities),
        ),
        random=random,
    )
    table = table_from_columns(
        atom=list(range(utilities.size)),
        utility=[float(u) for u in utilities],
        argmax=[bool(i in argmax) for i in range(utilities.size)],
        maximizer=[float(w) for w in maximized.solution.weights],
    )
    return CommandResult(report=report, tables={"utilities": table})
