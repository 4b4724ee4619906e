"""Empirical-likelihood and exponential-tilting weights through their convex duals."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np
import numpy.typing as npt
from scipy.linalg import null_space
from scipy.optimize import linprog, minimize
from scipy.special import logsumexp, softmax, xlogy

from app.core.core_messages import MessageKeys, msg
from app.core.core_numerics import FloatArray

from ..config import MomentSettings, get_moment_settings
from .exceptions import ElInfeasibleError, EtInfeasibleError

logger = logging.getLogger("app_logger")

CONSTRAINT_TOL = 1e-8
_MAX_HALVINGS = 60
_NEWTON_DECREMENT_TOL = 1e-20

Criterion = Literal["el", "et"]


@dataclass(frozen=True, eq=False, slots=True)
class WeightSolution:
    """Weights on the n observations satisfying Σ w_i g_i = 0.

    ``criterion`` is log R = Σ log(n p_i) for EL and Σ w_i log(n w_i) for ET.
    """

    weights: FloatArray
    multiplier: FloatArray
    criterion: float
    converged: bool
    iterations: int
    constraint_residual: float


def _as_gmat(gmat: npt.ArrayLike) -> FloatArray:
    values = np.asarray(gmat, dtype=np.float64)
    return values[:, None] if values.ndim == 1 else values


def _max_min_weights(g: FloatArray) -> tuple[float, FloatArray | None]:
    """Weights solving Σ w_i g_i = 0 on the simplex with the largest smallest weight."""
    n, k = g.shape
    cost = np.zeros(n + 1)
    cost[-1] = -1.0
    a_ub = np.hstack([-np.eye(n), np.ones((n, 1))])
    a_eq = np.vstack([np.hstack([g.T, np.zeros((k, 1))]), np.append(np.ones(n), 0.0)])
    b_eq = np.append(np.zeros(k), 1.0)
    bounds = [(0.0, None)] * n + [(None, 1.0)]
    result = linprog(cost, A_ub=a_ub, b_ub=np.zeros(n), A_eq=a_eq, b_eq=b_eq, bounds=bounds, method="highs")
    if result.status != 0:
        return float("-inf"), None
    return float(-result.fun), np.asarray(result.x[:n], dtype=np.float64)


def hull_interior_margin(gmat: npt.ArrayLike) -> float:
    """Largest t such that 0 = Σ w_i g_i with every w_i ≥ t; −inf when 0 is outside the hull."""
    return _max_min_weights(_as_gmat(gmat))[0]


def zero_in_interior(gmat: npt.ArrayLike, tol: float | None = None) -> bool:
    """0 lies in the relative interior of the convex hull of the rows."""
    threshold = tol if tol is not None else get_moment_settings().HULL_TOL
    return hull_interior_margin(gmat) > threshold


def _log_star(z: FloatArray, eps: float) -> tuple[FloatArray, FloatArray, FloatArray]:
    """log z above *eps*, its second-order Taylor extension below (value, first, second derivative)."""
    inside = z >= eps
    safe = np.where(inside, z, eps)
    value = np.where(inside, np.log(safe), np.log(eps) - 1.5 + 2.0 * z / eps - z**2 / (2.0 * eps**2))
    first = np.where(inside, 1.0 / safe, 2.0 / eps - z / eps**2)
    second = np.where(inside, -1.0 / safe**2, -1.0 / eps**2)
    return value, first, second


def el_weights(
    gmat: npt.ArrayLike,
    *,
    theta: str | None = None,
    settings: MomentSettings | None = None,
) -> WeightSolution:
    """Profile empirical-likelihood weights p_i = 1/(n(1 + λᵀg_i)).

    λ maximizes Σ log⋆(1 + λᵀg_i) by damped Newton; log⋆ keeps the dual finite
    while iterates leave the domain.
    """
    settings = settings or get_moment_settings()
    g = _as_gmat(gmat)
    n, k = g.shape
    if not zero_in_interior(g, settings.HULL_TOL):
        raise ElInfeasibleError(theta)

    eps = 1.0 / n
    grad_tol = settings.EL_TOL * max(1.0, n * float(np.abs(g).max()))
    lam = np.zeros(k)
    grad_norm = float("inf")
    iterations = 0
    for iterations in range(1, settings.EL_MAX_ITERATIONS + 1):
        value, first, second = _log_star(1.0 + g @ lam, eps)
        grad = -(g.T @ first)
        grad_norm = float(np.abs(grad).max())
        if grad_norm <= grad_tol:
            break
        hess = -(g.T * second) @ g
        direction = -np.linalg.lstsq(hess, grad, rcond=None)[0]
        current = -float(value.sum())
        step = 1.0
        for _ in range(_MAX_HALVINGS):
            trial = lam + step * direction
            if -float(_log_star(1.0 + g @ trial, eps)[0].sum()) <= current:
                lam = trial
                break
            step *= 0.5
        else:
            break

    z = 1.0 + g @ lam
    p = 1.0 / (n * z)
    p = p / p.sum()
    residual = float(np.abs(g.T @ p).max())
    converged = bool((z >= eps).all() and residual <= CONSTRAINT_TOL)
    if not converged:
        logger.warning(
            msg.get(MessageKeys.QUASIPOSTERIOR_NEWTON_STALLED, theta=theta, iterations=iterations, grad_norm=grad_norm)
        )
    return WeightSolution(
        weights=p,
        multiplier=lam,
        criterion=float(np.log(n * p).sum()),
        converged=converged,
        iterations=iterations,
        constraint_residual=residual,
    )


def et_weights(
    gmat: npt.ArrayLike,
    *,
    theta: str | None = None,
    settings: MomentSettings | None = None,
) -> WeightSolution:
    """Exponential-tilting weights w_i ∝ exp(τᵀg_i), τ = argmin log Σ exp(τᵀg_i)."""
    settings = settings or get_moment_settings()
    g = _as_gmat(gmat)
    n, k = g.shape
    if not zero_in_interior(g, settings.HULL_TOL):
        raise EtInfeasibleError(theta)

    def fun(tau: FloatArray) -> float:
        return float(logsumexp(g @ tau))

    def jac(tau: FloatArray) -> FloatArray:
        return g.T @ softmax(g @ tau)

    def hess(tau: FloatArray) -> FloatArray:
        w = softmax(g @ tau)
        mean = g.T @ w
        return (g.T * w) @ g - np.outer(mean, mean)

    result = minimize(fun, np.zeros(k), jac=jac, hess=hess, method="trust-exact", options={"gtol": settings.ET_TOL})
    tau = np.asarray(result.x, dtype=np.float64)
    w = softmax(g @ tau)
    residual = float(np.abs(g.T @ w).max())
    return WeightSolution(
        weights=w,
        multiplier=tau,
        criterion=float(xlogy(w, n * w).sum()),
        converged=residual <= CONSTRAINT_TOL,
        iterations=int(result.nit),
        constraint_residual=residual,
    )


def brute_force_weights(
    gmat: npt.ArrayLike,
    criterion: Criterion,
    *,
    max_iterations: int = 500,
    settings: MomentSettings | None = None,
) -> WeightSolution:
    """Primal Newton over {w > 0 : Σ w_i = 1, Σ w_i g_i = 0}, no duality.

    Starts from the max-min-weight feasible point and moves in the null space
    of the constraints, so every iterate stays feasible up to rounding.
    """
    settings = settings or get_moment_settings()
    g = _as_gmat(gmat)
    n, k = g.shape
    margin, start = _max_min_weights(g)
    if start is None or margin <= settings.HULL_TOL:
        raise ElInfeasibleError(None) if criterion == "el" else EtInfeasibleError(None)

    constraints = np.vstack([g.T, np.ones((1, n))])
    target = np.append(np.zeros(k), 1.0)
    # project the LP point onto the affine constraint set; the correction is at solver tolerance
    w = start - np.linalg.lstsq(constraints, constraints @ start - target, rcond=None)[0]
    basis = null_space(constraints)

    def value(v: FloatArray) -> float:
        return -float(np.log(n * v).sum()) if criterion == "el" else float(xlogy(v, n * v).sum())

    def derivatives(v: FloatArray) -> tuple[FloatArray, FloatArray]:
        if criterion == "el":
            return -1.0 / v, 1.0 / v**2
        return np.log(n * v) + 1.0, 1.0 / v

    decrement = 0.0
    iterations = 0
    while basis.shape[1] > 0 and iterations < max_iterations:
        iterations += 1
        grad, curvature = derivatives(w)
        reduced_grad = basis.T @ grad
        step = -np.linalg.solve((basis.T * curvature) @ basis, reduced_grad)
        decrement = -float(reduced_grad @ step)
        direction = basis @ step
        if decrement <= _NEWTON_DECREMENT_TOL:
            if (w + direction > 0).all():
                w = w + direction
            break
        current = value(w)
        t = 1.0
        for _ in range(_MAX_HALVINGS):
            trial = w + t * direction
            # decrease below rounding: any feasible step is accepted
            if (trial > 0).all() and (decrement <= 1e-10 or value(trial) <= current - 0.25 * t * decrement):
                w = trial
                break
            t *= 0.5
        else:
            break

    w = w / w.sum()
    residual = float(np.abs(g.T @ w).max())
    return WeightSolution(
        weights=w,
        multiplier=np.full(k, np.nan),
        criterion=-value(w) if criterion == "el" else value(w),
        converged=decrement <= _NEWTON_DECREMENT_TOL and residual <= CONSTRAINT_TOL,
        iterations=iterations,
        constraint_residual=residual,
    )
