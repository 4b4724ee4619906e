from __future__ import annotations

from app.shared.errors import AnalysisError


class InvalidPredictiveError(AnalysisError):
    default_code = "INVALID_PREDICTIVE"


class UnsortedOutcomeGridError(AnalysisError):
    default_code = "UNSORTED_OUTCOME_GRID"


class OutcomeOffGridError(AnalysisError):
    default_code = "OUTCOME_OFF_GRID"

    def __init__(self, y: float, nearest: float, distance: float, tolerance: float, step: int | None = None) -> None:
        super().__init__(
            message=f"Beobachtung {y!r} liegt {distance:.3g} vom nächsten Gitterknoten {nearest!r} entfernt "
            f"(Toleranz {tolerance:.3g}).",
            details=[{"y": y, "nearest": nearest, "distance": distance, "tolerance": tolerance, "step": step}],
        )
