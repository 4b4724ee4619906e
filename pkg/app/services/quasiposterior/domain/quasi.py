"""Quasi-posteriors from moment criteria and their convention offsets."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy.special import xlogy

from app.core.core_gibbs import GibbsResult, gibbs_update
from app.core.core_messages import MessageKeys, msg
from app.core.core_numerics import AtomLosses, Dataset, Distribution, ParamGrid, Temperature, total_variation
from app.shared.utils import parallel_map

from ..config import MomentSettings, get_moment_settings
from .exceptions import AllAtomsInfeasibleError, ElInfeasibleError, EtInfeasibleError
from .moments import MomentModel
from .weights import Criterion, WeightSolution, el_weights, et_weights

logger = logging.getLogger("app_logger")

_LABELS: dict[Criterion, str] = {"el": "EL", "et": "ET"}


@dataclass(frozen=True, eq=False, slots=True)
class AtomSolutions:
    """Per-atom weight solves; infeasible atoms carry ``None`` and a +∞ loss."""

    method: Criterion
    losses: AtomLosses
    solutions: tuple[WeightSolution | None, ...]
    infeasible: tuple[int, ...]

    @property
    def feasible(self) -> npt.NDArray[np.bool_]:
        return np.array([solution is not None for solution in self.solutions])

    def require_feasible(self, support: npt.NDArray[np.bool_]) -> None:
        if not (self.feasible & support).any():
            raise AllAtomsInfeasibleError(_LABELS[self.method], int(support.sum()))


def solve_atoms(
    method: Criterion,
    moments: MomentModel,
    grid: ParamGrid,
    data: Dataset,
    *,
    support: npt.NDArray[np.bool_] | None = None,
    scale: float | None = None,
    settings: MomentSettings | None = None,
    workers: int = 1,
) -> AtomSolutions:
    """Quasi-loss per atom: scale·(−log R) for EL, scale·Σ w log(n w) for ET."""
    settings = settings or get_moment_settings()
    factor = settings.QUASI_LOSS_SCALE if scale is None else scale
    active = np.ones(grid.size, dtype=bool) if support is None else np.asarray(support, dtype=bool)
    solver = el_weights if method == "el" else et_weights

    def solve(index: int) -> WeightSolution | None:
        if not active[index]:
            return None
        try:
            return solver(moments.gmat_at_atom(grid, index, data), theta=grid.label(index), settings=settings)
        except (ElInfeasibleError, EtInfeasibleError):
            logger.info(
                msg.get(MessageKeys.QUASIPOSTERIOR_ATOM_INFEASIBLE, atom=index, label=grid.label(index), method=_LABELS[method])
            )
            return None

    solutions = tuple(parallel_map(solve, range(grid.size), workers))
    values = np.zeros(grid.size)
    infeasible: list[int] = []
    for index, solution in enumerate(solutions):
        if not active[index]:
            continue
        if solution is None:
            values[index] = math.inf
            infeasible.append(index)
        else:
            values[index] = factor * (-solution.criterion if method == "el" else solution.criterion)
    return AtomSolutions(method=method, losses=AtomLosses(values=values), solutions=solutions, infeasible=tuple(infeasible))


def quasi_posterior(
    data: Dataset,
    moments: MomentModel,
    grid: ParamGrid,
    prior: Distribution,
    eta: Temperature | float,
    *,
    method: Criterion = "el",
    scale: float | None = None,
    settings: MomentSettings | None = None,
    workers: int = 1,
) -> GibbsResult:
    solved = solve_atoms(
        method, moments, grid, data, support=prior.support, scale=scale, settings=settings, workers=workers
    )
    solved.require_feasible(prior.support)
    return gibbs_update(prior, solved.losses, eta, allow_infinite=True)


def el_quasi_posterior(
    data: Dataset,
    moments: MomentModel,
    grid: ParamGrid,
    prior: Distribution,
    eta: Temperature | float,
    *,
    scale: float | None = None,
    settings: MomentSettings | None = None,
    workers: int = 1,
) -> GibbsResult:
    """Gibbs update with loss −log R(θ); infeasible atoms get zero weight."""
    return quasi_posterior(data, moments, grid, prior, eta, method="el", scale=scale, settings=settings, workers=workers)


@dataclass(frozen=True, slots=True)
class ConventionComparison:
    name: str
    offset: float
    max_offset_error: float
    tv: float
    delta_log_Z: float
    expected_delta_log_Z: float
    feasible_atoms: int


def _convention_losses(solved: AtomSolutions, n: int) -> tuple[AtomLosses, AtomLosses, float]:
    reference = np.where(solved.feasible, 0.0, math.inf)
    alternative = reference.copy()
    for index, solution in enumerate(solved.solutions):
        if solution is None:
            continue
        w = solution.weights
        if solved.method == "el":
            reference[index] = -float(np.log(n * w).sum())
            alternative[index] = -float(np.log(w).sum())
        else:
            reference[index] = float(xlogy(w, w).sum())
            alternative[index] = float(xlogy(w, n * w).sum())
    offset = n * math.log(n) if solved.method == "el" else math.log(n)
    return AtomLosses(values=reference), AtomLosses(values=alternative), offset


def convention_offset_check(
    data: Dataset,
    moments: MomentModel,
    grid: ParamGrid,
    prior: Distribution,
    eta: Temperature | float,
    *,
    settings: MomentSettings | None = None,
    workers: int = 1,
) -> tuple[ConventionComparison, ConventionComparison]:
    """Ratioed against un-ratioed EL (offset n·log n) and the two ET forms (offset log n)."""
    temperature = Temperature.coerce(eta)
    comparisons: list[ConventionComparison] = []
    methods: tuple[Criterion, ...] = ("el", "et")
    for method in methods:
        solved = solve_atoms(method, moments, grid, data, support=prior.support, scale=1.0, settings=settings, workers=workers)
        solved.require_feasible(prior.support)
        reference, alternative, offset = _convention_losses(solved, data.size)
        feasible = solved.feasible & prior.support
        error = float(np.abs(alternative.values[feasible] - reference.values[feasible] - offset).max())
        base = gibbs_update(prior, reference, temperature, allow_infinite=True)
        other = gibbs_update(prior, alternative, temperature, allow_infinite=True)
        comparisons.append(
            ConventionComparison(
                name="el-ratio-vs-product" if method == "el" else "et-kl-vs-entropy",
                offset=offset,
                max_offset_error=error,
                tv=total_variation(base.posterior, other.posterior),
                delta_log_Z=other.log_normalizer - base.log_normalizer,
                expected_delta_log_Z=-temperature.eta * offset,
                feasible_atoms=int(feasible.sum()),
            )
        )
    return comparisons[0], comparisons[1]
