from .reports import ReportModel, WeightRow, weight_rows

__all__ = ["ReportModel", "WeightRow", "weight_rows"]
