from .reports import (
    AnchoredRow,
    BatchingCheck,
    BayesFactorRow,
    EvidenceDemoReport,
    EvidenceDocument,
    ModelUpdate,
    ShiftCheck,
    UpdateReport,
)

__all__ = [
    "AnchoredRow",
    "BatchingCheck",
    "BayesFactorRow",
    "EvidenceDemoReport",
    "EvidenceDocument",
    "ModelUpdate",
    "ShiftCheck",
    "UpdateReport",
]
