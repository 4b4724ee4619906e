"""Datasets and predictive families built from an experiment document."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from app.core.core_numerics import Dataset, ParamGrid
from app.shared.predictive import (
    DEFAULT_MASS_TOL,
    OutcomeGrid,
    PredictiveFamily,
    bernoulli_family,
    gaussian_family,
    gaussian_scale_family,
)

from .config import DataSpec, FamilySpec
from .exceptions import ConfigNotFoundError, ConfigSemanticsError


def _synthetic(spec: DataSpec) -> np.ndarray:
    if spec.n is None:
        raise ConfigSemanticsError("data.n", "Synthetische Daten brauchen 'n'.")
    rng = np.random.default_rng(spec.seed)
    match spec.generator:
        case "bernoulli":
            return rng.binomial(1, spec.p, spec.n).astype(np.float64)
        case "normal":
            return rng.normal(spec.mean, spec.sd, spec.n)
        case "student_t":
            return spec.mean + spec.sd * rng.standard_t(spec.df, spec.n)
        case _:
            raise ConfigSemanticsError("data.generator", f"Unbekannter Generator '{spec.generator}'.")


def _from_csv(spec: DataSpec) -> np.ndarray:
    if spec.path is None:
        raise ConfigSemanticsError("data.path", "CSV-Daten brauchen 'path'.")
    path = Path(spec.path)
    if not path.is_file():
        raise ConfigNotFoundError(path)
    try:
        return np.loadtxt(path, delimiter=spec.delimiter, skiprows=spec.skiprows, ndmin=2, dtype=np.float64)
    except ValueError as exc:
        raise ConfigSemanticsError("data.path", f"CSV '{path.name}' ist nicht numerisch lesbar: {exc}") from exc


def build_dataset(spec: DataSpec) -> Dataset:
    match spec.source:
        case "inline":
            records = np.asarray(spec.values, dtype=np.float64)
        case "csv":
            records = _from_csv(spec)
        case _:
            records = _synthetic(spec)
    if records.size == 0:
        raise ConfigSemanticsError("data", "Der Datensatz ist leer.")
    if records.ndim == 2 and spec.outcome_column >= records.shape[1]:
        raise ConfigSemanticsError("data.outcome_column", f"Spalte {spec.outcome_column} existiert nicht.")
    return Dataset(records=records, outcome_column=spec.outcome_column)


def build_family(spec: FamilySpec, grid: ParamGrid, mass_tol: float = DEFAULT_MASS_TOL) -> PredictiveFamily:
    if spec.name == "bernoulli":
        return bernoulli_family(grid, mass_tol=mass_tol)
    if spec.outcome_grid is None:
        raise ConfigSemanticsError("model.family.outcome_grid", f"Die Familie '{spec.name}' braucht ein Ergebnisgitter.")
    outcome_grid = OutcomeGrid.trapezoid(spec.outcome_grid.start, spec.outcome_grid.stop, spec.outcome_grid.step)
    if spec.name == "gaussian":
        return gaussian_family(grid, outcome_grid, sigma=spec.sigma, mass_tol=mass_tol)
    return gaussian_scale_family(grid, outcome_grid, mass_tol=mass_tol)
