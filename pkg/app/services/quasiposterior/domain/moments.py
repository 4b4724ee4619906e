"""Moment conditions g(θ; x) for the mean and the mean with known variance."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from app.core.core_numerics import Dataset, FloatArray, NonFiniteLossError, ParamGrid

MomentOracle = Callable[[FloatArray, FloatArray], FloatArray]
"""(theta (d,), records (n, dx)) -> moment conditions (n, k)."""


@dataclass(frozen=True, slots=True)
class MomentModel:
    name: str
    g: MomentOracle
    k: int

    def gmat(self, theta: npt.ArrayLike, data: Dataset) -> FloatArray:
        point = np.atleast_1d(np.asarray(theta, dtype=np.float64))
        values = np.asarray(self.g(point, data.records), dtype=np.float64).reshape(data.size, self.k)
        bad = ~np.isfinite(values).all(axis=1)
        if bad.any():
            datum = int(np.flatnonzero(bad)[0])
            raise NonFiniteLossError(None, datum_index=datum, value=float(values[datum].sum()))
        return values

    def gmat_at_atom(self, grid: ParamGrid, index: int, data: Dataset) -> FloatArray:
        return self.gmat(grid.atoms[index], data)


def mean_moments(column: int = 0) -> MomentModel:
    """g = x − θ."""

    def g(theta: FloatArray, records: FloatArray) -> FloatArray:
        return (records[:, column] - theta[0])[:, None]

    return MomentModel(name="mean", g=g, k=1)


def mean_variance_moments(variance: float = 1.0, column: int = 0) -> MomentModel:
    """g = (x − θ, (x − θ)² − σ²) with σ² known."""

    def g(theta: FloatArray, records: FloatArray) -> FloatArray:
        centered = records[:, column] - theta[0]
        return np.column_stack([centered, centered**2 - variance])

    return MomentModel(name="mean-variance", g=g, k=2)


def build_moment_model(name: str, *, variance: float = 1.0, column: int = 0) -> MomentModel:
    match name:
        case "mean":
            return mean_moments(column)
        case "mean-variance":
            return mean_variance_moments(variance, column)
        case _:
            raise ValueError(f"unknown moment model '{name}'")
