from .reports import CalibrateReport, CalibrationResult, MinimizerSummary, SafeBayesResult, SafeBayesRow

__all__ = ["CalibrateReport", "CalibrationResult", "MinimizerSummary", "SafeBayesResult", "SafeBayesRow"]
