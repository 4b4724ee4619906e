from .reports import DeltaRow, HeldoutRow, ModelScores, ScoreReport, ShiftInvarianceRow, TraceSummary

__all__ = ["DeltaRow", "HeldoutRow", "ModelScores", "ScoreReport", "ShiftInvarianceRow", "TraceSummary"]
