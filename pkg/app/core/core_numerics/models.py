"""Domain types shared by every module.

All types are immutable after construction: numpy payloads are copied and
marked read-only, so instances can be shared across threads.
"""

from __future__ import annotations

import dataclasses
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from .exceptions import (
    DegenerateWeightsError,
    EmptyDatasetError,
    EmptySampleGridError,
    GridMismatchError,
    InvalidGridError,
    InvalidScaleError,
    InvalidTemperatureError,
    InvalidWeightError,
    MissingOracleError,
    NonFiniteLossError,
)
from .logspace import normalize_log_weights

FloatArray = npt.NDArray[np.float64]
BoolArray = npt.NDArray[np.bool_]

# Absolute tolerance on sum(exp(log_weights)) == 1
SIMPLEX_TOL = 1e-12


def _readonly(values: npt.ArrayLike) -> FloatArray:
    arr = np.array(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


def _as_matrix(values: npt.ArrayLike) -> FloatArray:
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr[:, None]
    return arr


@dataclass(frozen=True, eq=False, slots=True)
class ParamGrid:
    """Finite, ordered set of parameter/action atoms (shape ``(m, d)``)."""

    atoms: FloatArray
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        try:
            atoms = _as_matrix(self.atoms)
        except ValueError as exc:
            raise InvalidGridError(message="Alle Atome müssen dieselbe Dimension haben.") from exc
        if atoms.ndim != 2 or atoms.shape[0] == 0 or atoms.shape[1] == 0:
            raise InvalidGridError(message="Das Parametergitter braucht mindestens ein Atom.")
        if not np.isfinite(atoms).all():
            raise InvalidGridError(message="Atome müssen endliche Koordinaten haben.")
        if np.unique(atoms, axis=0).shape[0] != atoms.shape[0]:
            raise InvalidGridError(message="Atome müssen paarweise verschieden sein.")
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != atoms.shape[0]:
                raise InvalidGridError(message="Es muss genau ein Label pro Atom geben.")
            object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "atoms", _readonly(atoms))

    @classmethod
    def from_points(cls, points: npt.ArrayLike, labels: Sequence[str] | None = None) -> ParamGrid:
        return cls(atoms=np.asarray(points, dtype=np.float64), labels=tuple(labels) if labels is not None else None)

    @classmethod
    def linspace(cls, start: float, stop: float, num: int) -> ParamGrid:
        return cls(atoms=np.linspace(start, stop, num))

    @property
    def size(self) -> int:
        return int(self.atoms.shape[0])

    @property
    def dim(self) -> int:
        return int(self.atoms.shape[1])

    def __len__(self) -> int:
        return self.size

    def label(self, index: int) -> str:
        if self.labels is not None:
            return self.labels[index]
        coords = ", ".join(f"{value:.6g}" for value in self.atoms[index])
        return f"θ[{index}]=({coords})"

    def matches(self, other: ParamGrid) -> bool:
        return self is other or (self.atoms.shape == other.atoms.shape and bool(np.array_equal(self.atoms, other.atoms)))

    def product(self, other: ParamGrid) -> ParamGrid:
        """Product grid Θ1 × Θ2 in row-major order (atom ``i * |Θ2| + j``)."""
        left = np.repeat(self.atoms, other.size, axis=0)
        right = np.tile(other.atoms, (self.size, 1))
        return ParamGrid(atoms=np.hstack([left, right]))


@dataclass(frozen=True, eq=False, slots=True)
class Distribution:
    """Probability weights on a ParamGrid, stored as natural-log weights."""

    grid: ParamGrid
    log_weights: FloatArray

    def __post_init__(self) -> None:
        log_weights = np.asarray(self.log_weights, dtype=np.float64).reshape(-1)
        if log_weights.size != self.grid.size:
            raise GridMismatchError(self.grid.size, int(log_weights.size))
        if np.isnan(log_weights).any() or np.isposinf(log_weights).any():
            raise InvalidWeightError()
        if np.isneginf(log_weights).all():
            raise DegenerateWeightsError()
        total = float(np.exp(log_weights).sum())
        if abs(total - 1.0) > SIMPLEX_TOL:
            raise InvalidWeightError(
                message=f"Die Gewichte summieren sich zu {total!r} statt 1.",
                details=[{"total": total}],
            )
        object.__setattr__(self, "log_weights", _readonly(log_weights))

    @classmethod
    def from_raw_log_weights(cls, grid: ParamGrid, raw: npt.ArrayLike) -> Distribution:
        return cls(grid=grid, log_weights=normalize_log_weights(raw))

    @classmethod
    def uniform(cls, grid: ParamGrid) -> Distribution:
        return cls.from_raw_log_weights(grid, np.zeros(grid.size))

    @classmethod
    def from_weights(cls, grid: ParamGrid, weights: npt.ArrayLike) -> Distribution:
        arr = np.asarray(weights, dtype=np.float64).reshape(-1)
        if np.isnan(arr).any() or (arr < 0).any() or np.isinf(arr).any():
            raise InvalidWeightError()
        with np.errstate(divide="ignore"):
            return cls.from_raw_log_weights(grid, np.log(arr))

    @classmethod
    def point_mass(cls, grid: ParamGrid, index: int) -> Distribution:
        raw = np.full(grid.size, -np.inf)
        raw[index] = 0.0
        return cls(grid=grid, log_weights=raw)

    @property
    def weights(self) -> FloatArray:
        return np.exp(self.log_weights)

    @property
    def support(self) -> BoolArray:
        return np.isfinite(self.log_weights)

    def is_point_mass(self) -> bool:
        return int(self.support.sum()) == 1


@dataclass(frozen=True, slots=True)
class Temperature:
    """Learning rate η: strictly positive and finite."""

    eta: float

    def __post_init__(self) -> None:
        eta = float(self.eta)
        if not math.isfinite(eta) or eta <= 0.0:
            raise InvalidTemperatureError(self.eta)
        object.__setattr__(self, "eta", eta)

    @classmethod
    def coerce(cls, value: Temperature | float) -> Temperature:
        return value if isinstance(value, Temperature) else cls(float(value))


@dataclass(frozen=True, eq=False, slots=True)
class SampleGrid:
    """Quadrature nodes on the sample space with strictly positive weights."""

    nodes: FloatArray
    quad_weights: FloatArray
    discrete: bool = False

    def __post_init__(self) -> None:
        nodes = _as_matrix(self.nodes)
        weights = np.asarray(self.quad_weights, dtype=np.float64).reshape(-1)
        if nodes.shape[0] == 0 or weights.size == 0:
            raise EmptySampleGridError()
        if nodes.shape[0] != weights.size:
            raise InvalidGridError(message="Knoten und Quadraturgewichte haben unterschiedliche Länge.")
        if not np.isfinite(weights).all() or (weights <= 0).any():
            raise InvalidGridError(message="Quadraturgewichte müssen strikt positiv sein.")
        object.__setattr__(self, "nodes", _readonly(nodes))
        object.__setattr__(self, "quad_weights", _readonly(weights))

    @classmethod
    def trapezoid(cls, start: float, stop: float, step: float) -> SampleGrid:
        if not stop > start or not step > 0:
            raise InvalidGridError(message="Trapezgitter braucht start < stop und step > 0.")
        count = round((stop - start) / step) + 1
        nodes = np.linspace(start, stop, count)
        h = (stop - start) / (count - 1)
        weights = np.full(count, h)
        weights[[0, -1]] = h / 2.0
        return cls(nodes=nodes, quad_weights=weights)

    @classmethod
    def from_points(cls, points: npt.ArrayLike, masses: npt.ArrayLike | None = None) -> SampleGrid:
        """Discrete sample space (counting measure unless *masses* are given)."""
        nodes = _as_matrix(points)
        weights = np.ones(nodes.shape[0]) if masses is None else np.asarray(masses, dtype=np.float64)
        return cls(nodes=nodes, quad_weights=weights, discrete=True)

    @property
    def size(self) -> int:
        return int(self.nodes.shape[0])

    @property
    def log_weights(self) -> FloatArray:
        return np.log(self.quad_weights)

    def half_resolution(self) -> SampleGrid | None:
        """Trapezoid rule on every other node, always keeping both endpoints.

        For an odd-sized uniform grid this is the trapezoid rule at twice the step;
        for an even-sized one the last interval is a single step. Discrete grids,
        grids with fewer than three nodes and grids without sorted 1-d nodes have
        no coarse counterpart.
        """
        if self.discrete or self.size < 3 or self.nodes.shape[1] != 1:
            return None
        points = self.nodes[:, 0]
        if not (np.diff(points) > 0).all():
            return None
        keep = np.arange(0, self.size, 2)
        if keep[-1] != self.size - 1:
            keep = np.append(keep, self.size - 1)
        gaps = np.diff(points[keep])
        coarse = np.zeros(keep.size)
        coarse[:-1] += 0.5 * gaps
        coarse[1:] += 0.5 * gaps
        return SampleGrid(nodes=self.nodes[keep], quad_weights=coarse)


@dataclass(frozen=True, eq=False, slots=True)
class Dataset:
    """Ordered data records ``(n, dx)``; order is significant (prequential)."""

    records: FloatArray
    outcome_column: int = 0

    def __post_init__(self) -> None:
        records = _as_matrix(self.records)
        if records.shape[0] == 0:
            raise EmptyDatasetError()
        if not 0 <= self.outcome_column < records.shape[1]:
            raise InvalidGridError(message=f"Ergebnisspalte {self.outcome_column} existiert nicht.")
        object.__setattr__(self, "records", _readonly(records))

    @property
    def size(self) -> int:
        return int(self.records.shape[0])

    def __len__(self) -> int:
        return self.size

    @property
    def outcomes(self) -> FloatArray:
        return self.records[:, self.outcome_column]

    def head(self, t: int) -> Dataset:
        return Dataset(records=self.records[:t], outcome_column=self.outcome_column)

    def subset(self, indices: Sequence[int] | npt.NDArray[np.intp]) -> Dataset:
        return Dataset(records=self.records[np.asarray(indices, dtype=np.intp)], outcome_column=self.outcome_column)

    def blocks(self, count: int) -> list[Dataset]:
        """Split into *count* contiguous, non-empty blocks."""
        count = max(1, min(count, self.size))
        return [Dataset(records=chunk, outcome_column=self.outcome_column) for chunk in np.array_split(self.records, count)]


@dataclass(frozen=True, eq=False, slots=True)
class AtomLosses:
    """Per-atom cumulative loss ``values + offset``.

    ``offset`` carries data-only constants (shifts that do not depend on θ),
    so posterior computations only ever see ``values``.
    """

    values: FloatArray
    offset: float = 0.0

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.float64).reshape(-1)
        offset = float(self.offset)
        if not math.isfinite(offset):
            raise NonFiniteLossError(None, value=offset)
        object.__setattr__(self, "values", _readonly(values))
        object.__setattr__(self, "offset", offset)

    @classmethod
    def coerce(cls, losses: AtomLosses | npt.ArrayLike) -> AtomLosses:
        return losses if isinstance(losses, AtomLosses) else cls(values=np.asarray(losses, dtype=np.float64))

    @property
    def size(self) -> int:
        return int(self.values.size)

    @property
    def total(self) -> FloatArray:
        return self.values + self.offset

    def __add__(self, other: AtomLosses) -> AtomLosses:
        if other.size != self.size:
            raise GridMismatchError(self.size, other.size)
        return AtomLosses(values=self.values + other.values, offset=self.offset + other.offset)

    def shifted(self, c: float) -> AtomLosses:
        return AtomLosses(values=self.values, offset=self.offset + c)

    def scaled(self, a: float) -> AtomLosses:
        return AtomLosses(values=a * self.values, offset=a * self.offset)


@dataclass(frozen=True, eq=False, slots=True)
class LossMatrix:
    """Losses per (atom, datum) plus per-datum data-only offsets."""

    values: FloatArray
    column_offsets: FloatArray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.float64)
        offsets = np.asarray(self.column_offsets, dtype=np.float64).reshape(-1)
        if values.ndim != 2 or offsets.size != values.shape[1]:
            raise GridMismatchError(int(values.shape[-1]), int(offsets.size))
        object.__setattr__(self, "values", _readonly(values))
        object.__setattr__(self, "column_offsets", _readonly(offsets))

    @property
    def n_atoms(self) -> int:
        return int(self.values.shape[0])

    @property
    def n_data(self) -> int:
        return int(self.values.shape[1])

    @property
    def total(self) -> FloatArray:
        return self.values + self.column_offsets[None, :]

    def column(self, t: int) -> AtomLosses:
        return AtomLosses(values=self.values[:, t], offset=float(self.column_offsets[t]))

    def cumulative(self) -> AtomLosses:
        """L_n(θ) = Σ_t ℓ(θ; x_t)."""
        return AtomLosses(values=self.values.sum(axis=1), offset=math.fsum(self.column_offsets))

    def block_sums(self, count: int) -> list[AtomLosses]:
        """Cumulative losses of *count* contiguous data blocks."""
        count = max(1, min(count, self.n_data))
        splits = np.array_split(np.arange(self.n_data), count)
        return [
            AtomLosses(values=self.values[:, idx].sum(axis=1), offset=math.fsum(self.column_offsets[idx]))
            for idx in splits
        ]


PointwiseLoss = Callable[[FloatArray, FloatArray], FloatArray]
"""(atoms (m, d), records (n, dx)) -> losses (m, n)."""
GradOracle = Callable[[FloatArray, FloatArray], FloatArray]
"""(theta (d,), records (n, dx)) -> per-datum gradients (n, d)."""
HessOracle = Callable[[FloatArray, FloatArray], FloatArray]
"""(theta (d,), records (n, dx)) -> per-datum Hessians (n, d, d)."""
ShiftFn = Callable[[FloatArray], FloatArray]
"""records (n, dx) -> data-only shift c(x) per datum (n,)."""


@dataclass(frozen=True, slots=True)
class LossModel:
    """Per-datum loss oracle ℓ(θ; x) with optional gradient/Hessian in θ."""

    name: str
    pointwise: PointwiseLoss
    grad: GradOracle | None = None
    hess: HessOracle | None = None
    shift: ShiftFn | None = None
    scale: float = 1.0

    @property
    def has_grad(self) -> bool:
        return self.grad is not None

    @property
    def has_hess(self) -> bool:
        return self.hess is not None

    def _offsets(self, records: FloatArray) -> FloatArray:
        if self.shift is None:
            return np.zeros(records.shape[0])
        return self.scale * np.asarray(self.shift(records), dtype=np.float64).reshape(-1)

    def evaluate(self, grid: ParamGrid, data: Dataset, support: BoolArray | None = None) -> LossMatrix:
        """Loss matrix on grid × data; non-finite entries on *support* abort the run."""
        raw = self.scale * np.asarray(self.pointwise(grid.atoms, data.records), dtype=np.float64)
        if raw.shape != (grid.size, data.size):
            raise GridMismatchError(grid.size, int(raw.shape[0]), message=f"Verlust '{self.name}' lieferte Form {raw.shape}.")
        active = np.ones(grid.size, dtype=bool) if support is None else np.asarray(support, dtype=bool)
        bad = ~np.isfinite(raw) & active[:, None]
        if bad.any():
            atom, datum = (int(v) for v in np.argwhere(bad)[0])
            raise NonFiniteLossError(atom, grid.label(atom), datum_index=datum, value=float(raw[atom, datum]))
        # off-support atoms keep finite losses and carry +inf otherwise
        values = np.where(active[:, None] | np.isfinite(raw), raw, np.inf)
        offsets = self._offsets(data.records)
        if not np.isfinite(offsets).all():
            datum = int(np.flatnonzero(~np.isfinite(offsets))[0])
            raise NonFiniteLossError(None, datum_index=datum, value=float(offsets[datum]))
        return LossMatrix(values=values, column_offsets=offsets)

    def eval(self, atom_index: int, grid: ParamGrid, datum: npt.ArrayLike) -> float:
        record = _as_matrix(np.atleast_1d(np.asarray(datum, dtype=np.float64)))
        record = record.reshape(1, -1)
        value = self.scale * float(np.asarray(self.pointwise(grid.atoms[atom_index : atom_index + 1], record))[0, 0])
        return value + float(self._offsets(record)[0])

    def loss_at(self, theta: npt.ArrayLike, data: Dataset) -> FloatArray:
        point = np.atleast_1d(np.asarray(theta, dtype=np.float64)).reshape(1, -1)
        raw = self.scale * np.asarray(self.pointwise(point, data.records), dtype=np.float64)[0]
        return raw + self._offsets(data.records)

    def mean_loss(self, theta: npt.ArrayLike, data: Dataset) -> float:
        return float(np.mean(self.loss_at(theta, data)))

    def grad_at(self, theta: npt.ArrayLike, data: Dataset) -> FloatArray:
        if self.grad is None:
            raise MissingOracleError(self.name, "Gradienten")
        point = np.atleast_1d(np.asarray(theta, dtype=np.float64))
        return self.scale * np.asarray(self.grad(point, data.records), dtype=np.float64).reshape(data.size, point.size)

    def hess_at(self, theta: npt.ArrayLike, data: Dataset) -> FloatArray:
        if self.hess is None:
            raise MissingOracleError(self.name, "Hesse")
        point = np.atleast_1d(np.asarray(theta, dtype=np.float64))
        d = point.size
        return self.scale * np.asarray(self.hess(point, data.records), dtype=np.float64).reshape(data.size, d, d)

    def shifted(self, shift: ShiftFn) -> LossModel:
        """Add a data-only shift c(x); composes with any existing shift."""
        previous = self.shift
        # stored shifts are in unscaled units; evaluate() multiplies by scale
        scale = self.scale

        def combined(records: FloatArray) -> FloatArray:
            extra = np.asarray(shift(records), dtype=np.float64).reshape(-1) / scale
            if previous is None:
                return extra
            return np.asarray(previous(records), dtype=np.float64).reshape(-1) + extra

        return dataclasses.replace(self, shift=combined)

    def scaled(self, a: float) -> LossModel:
        if not math.isfinite(a) or a <= 0.0:
            raise InvalidScaleError(a)
        return dataclasses.replace(self, scale=self.scale * a)


__all__ = [
    "SIMPLEX_TOL",
    "AtomLosses",
    "BoolArray",
    "Dataset",
    "Distribution",
    "FloatArray",
    "GradOracle",
    "HessOracle",
    "LossMatrix",
    "LossModel",
    "ParamGrid",
    "PointwiseLoss",
    "SampleGrid",
    "ShiftFn",
    "Temperature",
]
