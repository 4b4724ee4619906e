"""Expected-utility (vNM) rules: linear objectives over the simplex only pick argmax atoms."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy.special import logsumexp

from app.core.core_messages import MessageKeys, msg
from app.core.core_numerics import Distribution, FloatArray, GridMismatchError, NonFiniteLossError, ParamGrid

from ..config import SolverSettings, get_solver_settings

logger = logging.getLogger("app_logger")

# Off-argmax mass treated as zero by maximize_linear_utility / is_vnm_rationalizable
CONCENTRATION_TOL = 1e-12


def _utilities(utility: npt.ArrayLike, grid: ParamGrid | None) -> tuple[FloatArray, ParamGrid]:
    values = np.asarray(utility, dtype=np.float64).reshape(-1)
    resolved = grid if grid is not None else ParamGrid.from_points(np.arange(values.size, dtype=np.float64))
    if values.size != resolved.size:
        raise GridMismatchError(resolved.size, int(values.size))
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        index = int(bad[0])
        raise NonFiniteLossError(index, resolved.label(index), value=float(values[index]))
    return values, resolved


def vnm_optimal_rule(utility: npt.ArrayLike, grid: ParamGrid | None = None) -> tuple[Distribution, tuple[int, ...]]:
    """Point mass on the lowest-index maximizer, plus the full argmax set (0-based)."""
    values, resolved = _utilities(utility, grid)
    argmax = tuple(int(i) for i in np.flatnonzero(values == values.max()))
    return Distribution.point_mass(resolved, argmax[0]), argmax


@dataclass(frozen=True, eq=False, slots=True)
class UtilityReport:
    solution: Distribution
    value: float
    iterations: int
    residual_mass: float
    converged: bool

    @property
    def max_weight(self) -> float:
        return float(self.solution.weights.max())


def maximize_linear_utility(
    utility: npt.ArrayLike,
    grid: ParamGrid | None = None,
    *,
    settings: SolverSettings | None = None,
) -> UtilityReport:
    """Exponentiated-gradient ascent of Σ u_i q_i from the uniform rule, doubling the step."""
    cfg = settings or get_solver_settings()
    values, resolved = _utilities(utility, grid)
    best = values == values.max()
    centered = values - values.max()
    log_q = np.full(values.size, -np.log(values.size))
    step = 1.0
    iterations = 0

    def residual(log_weights: FloatArray) -> float:
        if best.all():
            return 0.0
        return float(np.exp(logsumexp(log_weights[~best])))

    mass = residual(log_q)
    while mass > CONCENTRATION_TOL and iterations < cfg.SOLVER_MAX_ITERATIONS:
        iterations += 1
        log_q = log_q + step * centered
        log_q -= logsumexp(log_q)
        mass = residual(log_q)
        step = min(2.0 * step, cfg.SOLVER_MAX_STEP)

    converged = mass <= CONCENTRATION_TOL
    if not converged:
        logger.warning(msg.get(MessageKeys.VARIATIONAL_UTILITY_NOT_CONVERGED, iterations=iterations, residual=mass))
    solution = Distribution.from_raw_log_weights(resolved, log_q)
    return UtilityReport(
        solution=solution,
        value=float(np.dot(solution.weights, values)),
        iterations=iterations,
        residual_mass=mass,
        converged=converged,
    )


def is_vnm_rationalizable(q: Distribution, utility: npt.ArrayLike, tol: float = CONCENTRATION_TOL) -> bool:
    """True when q puts (up to *tol*) all its mass on maximizers of the utility."""
    values, _ = _utilities(utility, q.grid)
    best = values == values.max()
    return float(q.weights[~best].sum()) <= tol
