from .reports import DiagnoseReport, ExtractionSummary, PartitionRow

__all__ = ["DiagnoseReport", "ExtractionSummary", "PartitionRow"]
