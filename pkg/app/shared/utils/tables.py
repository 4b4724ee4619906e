"""CSV plot-data tables: header row, comma-separated, LF line endings."""

from __future__ import annotations

import csv
import io
import math
import numbers
from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path

Cell = float | int | str | None


def format_cell(value: Cell) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        value = float(value)
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.17g}"
    return str(value)


@dataclass(frozen=True)
class CsvTable:
    columns: tuple[str, ...]
    rows: list[tuple[Cell, ...]] = field(default_factory=list)

    def __post_init__(self) -> None:
        width = len(self.columns)
        for row in self.rows:
            if len(row) != width:
                raise ValueError(f"row has {len(row)} cells, expected {width}")

    def render(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        writer.writerows([format_cell(cell) for cell in row] for row in self.rows)
        return buffer.getvalue()

    def write(self, path: Path) -> Path:
        with path.open("w", encoding="utf-8", newline="\n") as handle:
            handle.write(self.render())
        return path


def table_from_columns(**columns: Sequence[Cell]) -> CsvTable:
    """Build a table from equally long named columns (keyword order is column order)."""
    names = tuple(columns)
    lengths = {len(values) for values in columns.values()}
    if len(lengths) > 1:
        raise ValueError("columns must have equal length")
    return CsvTable(columns=names, rows=list(zip(*columns.values(), strict=True)))
