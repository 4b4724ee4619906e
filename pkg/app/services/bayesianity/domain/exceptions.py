from __future__ import annotations

from app.shared.errors import AnalysisError


class PartitionOverflowError(AnalysisError):
    default_code = "PARTITION_OVERFLOW"

    def __init__(self, atom_index: int, label: str, log_value: float) -> None:
        super().__init__(details=[{"atom": atom_index, "label": label, "log_A": repr(log_value)}])
        self.atom_index = atom_index


class NotBeliefPosteriorError(AnalysisError):
    default_code = "NOT_BELIEF_POSTERIOR"

    def __init__(self, verdict: str, variation: float) -> None:
        super().__init__(
            message=f"Keine Likelihood extrahierbar: Urteil '{verdict}' (relative Variation {variation:.6g}).",
            details=[{"verdict": verdict, "max_rel_variation": variation}],
        )
        self.verdict = verdict
