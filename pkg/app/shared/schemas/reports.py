"""Base model for command reports written as ``<command>_report.json``."""

from __future__ import annotations

from typing import TYPE_CHECKING

from pydantic import BaseModel, ConfigDict

if TYPE_CHECKING:
    from app.core.core_numerics import Distribution


class ReportModel(BaseModel):
    """Reports carry no timestamps; non-finite floats serialize as ``null``."""

    model_config = ConfigDict(extra="forbid", frozen=True, ser_json_inf_nan="null")

    claim: str


class WeightRow(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True, ser_json_inf_nan="null")

    atom: int
    label: str
    weight: float


def weight_rows(distribution: Distribution) -> list[WeightRow]:
    weights = distribution.weights
    return [
        WeightRow(atom=index, label=distribution.grid.label(index), weight=float(weights[index]))
        for index in range(distribution.grid.size)
    ]


__all__ = ["ReportModel", "WeightRow", "weight_rows"]
