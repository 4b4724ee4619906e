from __future__ import annotations

from app.shared.errors import AnalysisError


class SingularInformationError(AnalysisError):
    default_code = "SINGULAR_INFORMATION"

    def __init__(self, matrix: str, condition: float) -> None:
        super().__init__(details=[{"matrix": matrix, "condition": condition}])
        self.matrix = matrix


class InsufficientDataError(AnalysisError):
    default_code = "INSUFFICIENT_DATA"

    def __init__(self, n: int, dim: int) -> None:
        super().__init__(details=[{"n": n, "dim": dim}])
        self.n = n
        self.dim = dim


class MinimizerDivergedError(AnalysisError):
    """Carries the optimizer trace (θ and gradient norm per accepted iterate)."""

    default_code = "MINIMIZER_DIVERGED"

    def __init__(self, reason: str, trace: list[dict[str, object]]) -> None:
        super().__init__(details=trace[-10:], dev={"reason": reason, "iterations": len(trace)})
        self.reason = reason
        self.trace = trace
