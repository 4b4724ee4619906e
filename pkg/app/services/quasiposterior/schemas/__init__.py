from .reports import ConventionRow, QuasiMethodResult, QuasiReport

__all__ = ["ConventionRow", "QuasiMethodResult", "QuasiReport"]
