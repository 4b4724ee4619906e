from .evidence import (
    ANCHORED_NOTE,
    WARNING_BANNER,
    AnchoredBayesFactor,
    BayesFactorShiftDemo,
    EvidenceRecord,
    ShiftedPair,
    anchored_bayes_factor,
    anchored_evidence,
    bayes_factor_shift_demo,
    evidence_record,
    generalized_bayes_factor,
    record_from_result,
    shifted_pair_report,
)
from .exceptions import InvalidEvidenceError, TemperatureMismatchError

__all__ = [
    "ANCHORED_NOTE",
    "WARNING_BANNER",
    "AnchoredBayesFactor",
    "BayesFactorShiftDemo",
    "EvidenceRecord",
    "InvalidEvidenceError",
    "ShiftedPair",
    "TemperatureMismatchError",
    "anchored_bayes_factor",
    "anchored_evidence",
    "bayes_factor_shift_demo",
    "evidence_record",
    "generalized_bayes_factor",
    "record_from_result",
    "shifted_pair_report",
]
