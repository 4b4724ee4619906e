"""Errors raised by the numerical core (grids, weights, temperatures, losses)."""

from __future__ import annotations

from app.shared.errors import AnalysisError


class DegenerateWeightsError(AnalysisError):
    default_code = "DEGENERATE_WEIGHTS"


class InvalidWeightError(AnalysisError):
    default_code = "INVALID_WEIGHT"


class GridMismatchError(AnalysisError):
    default_code = "GRID_MISMATCH"

    def __init__(self, left: int, right: int, message: str | None = None) -> None:
        super().__init__(
            message=message or f"Gitter passen nicht zusammen: {left} gegenüber {right} Atomen.",
            details=[{"left": left, "right": right}],
        )


class InvalidGridError(AnalysisError):
    default_code = "INVALID_GRID"


class InvalidTemperatureError(AnalysisError):
    default_code = "INVALID_TEMPERATURE"

    def __init__(self, eta: float) -> None:
        super().__init__(details=[{"eta": repr(eta)}])


class InvalidScaleError(AnalysisError):
    default_code = "INVALID_SCALE"

    def __init__(self, scale: float) -> None:
        super().__init__(details=[{"scale": repr(scale)}])


class NonFiniteLossError(AnalysisError):
    default_code = "NONFINITE_LOSS"

    def __init__(
        self,
        atom_index: int | None,
        label: str | None = None,
        *,
        datum_index: int | None = None,
        value: float | None = None,
        step: int | None = None,
    ) -> None:
        self.atom_index = atom_index
        self.label = label
        self.datum_index = datum_index
        self.step = step
        where = f"Atom {atom_index} ({label})" if atom_index is not None else "Datenverschiebung"
        if datum_index is not None:
            where += f", Datum {datum_index}"
        if step is not None:
            where += f", Schritt t={step}"
        detail: dict[str, object] = {"atom": atom_index, "label": label, "datum": datum_index, "value": repr(value)}
        if step is not None:
            detail["step"] = step
        super().__init__(
            message=f"Nicht endlicher Verlust bei {where}.",
            details=[detail],
        )


class EmptySampleGridError(AnalysisError):
    default_code = "EMPTY_SAMPLE_GRID"


class EmptyDatasetError(AnalysisError):
    default_code = "EMPTY_DATASET"


class MissingOracleError(AnalysisError):
    default_code = "MISSING_ORACLE"

    def __init__(self, loss_name: str, oracle: str) -> None:
        super().__init__(
            message=f"Der Verlust '{loss_name}' hat kein {oracle}-Orakel.",
            details=[{"loss": loss_name, "oracle": oracle}],
        )
