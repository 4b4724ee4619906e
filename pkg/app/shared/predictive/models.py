"""Predictive families on an outcome grid and the posterior-induced predictive."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from app.core.core_numerics import Distribution, FloatArray, GridMismatchError, InvalidGridError

from .exceptions import InvalidPredictiveError, OutcomeOffGridError, UnsortedOutcomeGridError

DEFAULT_MASS_TOL = 1e-8


def _readonly(values: npt.ArrayLike) -> FloatArray:
    arr = np.array(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False, slots=True)
class OutcomeGrid:
    """Scalar outcome nodes with quadrature weights (continuous) or unit masses (discrete)."""

    nodes: FloatArray
    weights: FloatArray
    discrete: bool = False

    def __post_init__(self) -> None:
        nodes = np.asarray(self.nodes, dtype=np.float64).reshape(-1)
        weights = np.asarray(self.weights, dtype=np.float64).reshape(-1)
        if nodes.size == 0 or nodes.size != weights.size:
            raise InvalidGridError(message="Ergebnisgitter braucht gleich viele Knoten und Gewichte (mindestens einen).")
        if not np.isfinite(nodes).all() or not np.isfinite(weights).all() or (weights <= 0).any():
            raise InvalidGridError(message="Ergebnisgitter: endliche Knoten und strikt positive Gewichte erforderlich.")
        object.__setattr__(self, "nodes", _readonly(nodes))
        object.__setattr__(self, "weights", _readonly(weights))

    @classmethod
    def trapezoid(cls, start: float, stop: float, step: float) -> OutcomeGrid:
        if not stop > start or not step > 0:
            raise InvalidGridError(message="Trapezgitter braucht start < stop und step > 0.")
        count = round((stop - start) / step) + 1
        nodes = np.linspace(start, stop, count)
        h = (stop - start) / (count - 1)
        weights = np.full(count, h)
        weights[[0, -1]] = h / 2.0
        return cls(nodes=nodes, weights=weights)

    @classmethod
    def discrete_points(cls, points: npt.ArrayLike) -> OutcomeGrid:
        nodes = np.asarray(points, dtype=np.float64).reshape(-1)
        return cls(nodes=nodes, weights=np.ones(nodes.size), discrete=True)

    @property
    def size(self) -> int:
        return int(self.nodes.size)

    @property
    def is_sorted(self) -> bool:
        return bool(np.all(np.diff(self.nodes) > 0))

    def require_sorted(self) -> None:
        if not self.is_sorted:
            raise UnsortedOutcomeGridError()

    def locate(self, y: float, snap_fraction: float = 0.5, step: int | None = None) -> tuple[int, bool]:
        """Index of the node for outcome *y* and whether it was snapped.

        Exact matches return immediately; otherwise the nearest node is used
        when it lies within ``snap_fraction`` of the local node spacing.
        """
        exact = np.flatnonzero(self.nodes == y)
        if exact.size:
            return int(exact[0]), False
        distances = np.abs(self.nodes - y)
        index = int(np.argmin(distances))
        if self.size == 1:
            spacing = 0.0
        else:
            neighbours = [abs(self.nodes[j] - self.nodes[index]) for j in (index - 1, index + 1) if 0 <= j < self.size]
            spacing = min(neighbours)
        tolerance = snap_fraction * spacing
        if distances[index] > tolerance:
            raise OutcomeOffGridError(float(y), float(self.nodes[index]), float(distances[index]), tolerance, step)
        return index, True


@dataclass(frozen=True, eq=False, slots=True)
class PredictiveFamily:
    """Per-atom predictive values p(y_j | θ_i); each row integrates to 1 on the outcome grid."""

    outcome_grid: OutcomeGrid
    density_table: FloatArray
    mass_tol: float = DEFAULT_MASS_TOL

    def __post_init__(self) -> None:
        table = np.asarray(self.density_table, dtype=np.float64)
        if table.ndim != 2 or table.shape[1] != self.outcome_grid.size:
            raise InvalidPredictiveError(message=f"Dichtetabelle hat Form {table.shape}, erwartet (m, {self.outcome_grid.size}).")
        if not np.isfinite(table).all() or (table < 0).any():
            raise InvalidPredictiveError(message="Dichtewerte müssen endlich und nichtnegativ sein.")
        masses = table @ self.outcome_grid.weights
        worst = int(np.argmax(np.abs(masses - 1.0)))
        if abs(masses[worst] - 1.0) > self.mass_tol:
            raise InvalidPredictiveError(details=[{"atom": worst, "mass": float(masses[worst])}])
        object.__setattr__(self, "density_table", _readonly(table))

    @property
    def n_atoms(self) -> int:
        return int(self.density_table.shape[0])


@dataclass(frozen=True, eq=False, slots=True)
class Predictive:
    """A single predictive density (or pmf) on an outcome grid."""

    grid: OutcomeGrid
    values: FloatArray

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _readonly(np.asarray(self.values, dtype=np.float64).reshape(-1)))

    @property
    def mass(self) -> float:
        return float(self.values @ self.grid.weights)


def induced_predictive(posterior: Distribution, family: PredictiveFamily) -> Predictive:
    """P(y_j) = Σ_i q_i · p(y_j | θ_i)."""
    if posterior.grid.size != family.n_atoms:
        raise GridMismatchError(posterior.grid.size, family.n_atoms)
    weights = posterior.weights
    support = posterior.support
    values = weights[support] @ family.density_table[support]
    return Predictive(grid=family.outcome_grid, values=values)
