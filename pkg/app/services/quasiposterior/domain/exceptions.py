from __future__ import annotations

from app.shared.errors import AnalysisError


class ElInfeasibleError(AnalysisError):
    default_code = "EL_INFEASIBLE"

    def __init__(self, theta: str | None = None) -> None:
        super().__init__(details=[{"theta": theta}])
        self.theta = theta


class EtInfeasibleError(AnalysisError):
    default_code = "ET_INFEASIBLE"

    def __init__(self, theta: str | None = None) -> None:
        super().__init__(details=[{"theta": theta}])
        self.theta = theta


class AllAtomsInfeasibleError(AnalysisError):
    default_code = "ALL_ATOMS_INFEASIBLE"

    def __init__(self, method: str, atoms: int) -> None:
        super().__init__(details=[{"method": method, "atoms": atoms}])
        self.method = method
