"""Penalized objective Σ q_i L_i + (1/η) D(q‖π) minimized over the simplex."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy.special import logsumexp

from app.core.core_messages import MessageKeys, msg
from app.core.core_numerics import (
    AtomLosses,
    Distribution,
    FloatArray,
    GridMismatchError,
    NonFiniteLossError,
    Temperature,
)

from ..config import SolverSettings, get_solver_settings
from .divergences import DivergenceSpec

logger = logging.getLogger("app_logger")

_TINY = np.finfo(np.float64).tiny
_EPS = np.finfo(np.float64).eps


@dataclass(frozen=True, eq=False, slots=True)
class SolveReport:
    solution: Distribution
    objective: float
    iterations: int
    converged: bool
    final_step_norm: float
    kkt_residual: float


def _loss_vector(losses: AtomLosses | npt.ArrayLike, size: int) -> tuple[FloatArray, float]:
    coerced = AtomLosses.coerce(losses)
    if coerced.size != size:
        raise GridMismatchError(size, coerced.size)
    return np.asarray(coerced.values), coerced.offset


def objective(
    q: Distribution,
    losses: AtomLosses | npt.ArrayLike,
    eta: Temperature | float,
    div: DivergenceSpec,
    baseline: Distribution,
) -> float:
    """Σ_i q_i L_i + (1/η) Σ_i π_i φ(q_i/π_i); +∞ unless q ≪ π."""
    temperature = Temperature.coerce(eta)
    if not q.grid.matches(baseline.grid):
        raise GridMismatchError(baseline.grid.size, q.grid.size)
    values, offset = _loss_vector(losses, q.grid.size)
    weights = q.weights
    penalty = float(div.value(weights, baseline.weights))
    if not math.isfinite(penalty):
        return math.inf
    active = weights > 0
    expected = math.fsum(weights[active] * values[active]) + offset
    return expected + penalty / temperature.eta


class _Problem:
    """The objective restricted to the baseline's support, in log-weight coordinates."""

    def __init__(self, values: FloatArray, log_baseline: FloatArray, eta: float, div: DivergenceSpec) -> None:
        self.values = values
        self.log_baseline = log_baseline
        self.baseline = np.exp(log_baseline)
        self.eta = eta
        self.div = div

    def ratio(self, log_q: FloatArray) -> FloatArray:
        return np.maximum(np.exp(log_q - self.log_baseline), _TINY)

    def value(self, log_q: FloatArray) -> float:
        q = np.exp(log_q)
        penalty = float(np.sum(self.baseline * self.div.phi(self.ratio(log_q))))
        return float(np.dot(q, self.values)) + penalty / self.eta

    def gradient(self, log_q: FloatArray) -> FloatArray:
        return self.values + np.asarray(self.div.dphi(self.ratio(log_q))) / self.eta


def _kkt_residual(q: FloatArray, grad: FloatArray) -> float:
    """q-weighted deviation of the gradient from its mean (0 exactly at a stationary point)."""
    mean = float(np.dot(q, grad))
    return float(np.dot(q, np.abs(grad - mean)))


def solve_penalized(
    baseline: Distribution,
    losses: AtomLosses | npt.ArrayLike,
    eta: Temperature | float,
    div: DivergenceSpec,
    tol: float | None = None,
    *,
    settings: SolverSettings | None = None,
) -> SolveReport:
    """Exponentiated gradient with Armijo backtracking, started at the baseline."""
    cfg = settings or get_solver_settings()
    tolerance = cfg.SOLVER_TOL if tol is None else tol
    temperature = Temperature.coerce(eta)
    values, _ = _loss_vector(losses, baseline.grid.size)
    support = baseline.support
    bad = np.flatnonzero(support & ~np.isfinite(values))
    if bad.size:
        index = int(bad[0])
        raise NonFiniteLossError(index, baseline.grid.label(index), value=float(values[index]))

    problem = _Problem(values[support], baseline.log_weights[support], temperature.eta, div)
    log_q = problem.log_baseline.copy()
    q = np.exp(log_q)
    current = problem.value(log_q)
    grad = problem.gradient(log_q)
    direction = grad - float(np.dot(q, grad))
    residual = _kkt_residual(q, grad)
    step = temperature.eta
    step_norm = 0.0
    iterations = 0

    while residual > tolerance and iterations < cfg.SOLVER_MAX_ITERATIONS:
        iterations += 1
        accepted = False
        while step > _TINY:
            candidate = log_q - step * direction
            candidate -= logsumexp(candidate)
            q_new = np.exp(candidate)
            trial = problem.value(candidate)
            if not math.isfinite(trial):
                step *= cfg.SOLVER_BACKTRACK
                continue
            delta = q_new - q
            change = trial - current
            if abs(change) <= 64.0 * _EPS * max(1.0, abs(current)):
                # below rounding: trapezoidal estimate of the change from both gradients
                grad_new = problem.gradient(candidate)
                change = 0.5 * float(np.dot(direction + grad_new - float(np.dot(q_new, grad_new)), delta))
            if change <= cfg.SOLVER_ARMIJO_C * float(np.dot(direction, delta)):
                accepted = True
                break
            step *= cfg.SOLVER_BACKTRACK
        if not accepted:
            break
        step_norm = float(np.abs(q_new - q).sum())
        if step_norm == 0.0:
            break
        log_q, q, current = candidate, q_new, trial
        grad = problem.gradient(log_q)
        # centered: a large step times the mean gradient would round log_q away
        direction = grad - float(np.dot(q, grad))
        residual = _kkt_residual(q, grad)
        step = min(step / cfg.SOLVER_BACKTRACK, cfg.SOLVER_MAX_STEP)

    converged = residual <= tolerance
    if not converged:
        logger.warning(msg.get(MessageKeys.VARIATIONAL_NOT_CONVERGED, iterations=iterations, step_norm=step_norm))

    full = np.full(baseline.grid.size, -np.inf)
    full[support] = log_q
    solution = Distribution.from_raw_log_weights(baseline.grid, full)
    return SolveReport(
        solution=solution,
        objective=objective(solution, losses, temperature, div, baseline),
        iterations=iterations,
        converged=converged,
        final_step_norm=step_norm,
        kkt_residual=residual,
    )


def brute_force_two_atom(
    baseline: Distribution,
    losses: AtomLosses | npt.ArrayLike,
    eta: Temperature | float,
    div: DivergenceSpec,
    *,
    settings: SolverSettings | None = None,
) -> tuple[Distribution, float]:
    """Grid search over q = (1 − x, x), then one refinement around the incumbent."""
    cfg = settings or get_solver_settings()
    if baseline.grid.size != 2:
        raise GridMismatchError(2, baseline.grid.size, message="Der Brute-Force-Vergleich braucht genau zwei Atome.")
    temperature = Temperature.coerce(eta)
    values, offset = _loss_vector(losses, 2)
    p = baseline.weights

    def evaluate(x: FloatArray) -> FloatArray:
        q = np.column_stack([1.0 - x, x])
        with np.errstate(invalid="ignore"):
            expected = np.where(q > 0, q * values, 0.0).sum(axis=1)
        return expected + np.asarray(div.value(q, p)) / temperature.eta

    coarse = np.linspace(0.0, 1.0, round(1.0 / cfg.ORACLE_COARSE_STEP) + 1)
    best = float(coarse[int(np.argmin(evaluate(coarse)))])
    lo, hi = max(0.0, best - cfg.ORACLE_COARSE_STEP), min(1.0, best + cfg.ORACLE_COARSE_STEP)
    fine = np.linspace(lo, hi, round((hi - lo) / cfg.ORACLE_FINE_STEP) + 1)
    scores = evaluate(fine)
    index = int(np.argmin(scores))
    x = float(fine[index])
    return Distribution.from_weights(baseline.grid, [1.0 - x, x]), float(scores[index]) + offset
