"""Helpers shared by the services: worker maps and CSV tables."""

from .parallel import parallel_map
from .tables import Cell, CsvTable, format_cell, table_from_columns

__all__ = [
    "Cell",
    "CsvTable",
    "format_cell",
    "parallel_map",
    "table_from_columns",
]
