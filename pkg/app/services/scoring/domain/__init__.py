from .exceptions import TraceMismatchError
from .prequential import HeldoutScore, ScoreTrace, delta_lpd, heldout_score, prequential_score
from .rules import ScoringRule, StepScore, crps, expected_score, log_score, score_step

__all__ = [
    "HeldoutScore",
    "ScoreTrace",
    "ScoringRule",
    "StepScore",
    "TraceMismatchError",
    "crps",
    "delta_lpd",
    "expected_score",
    "heldout_score",
    "log_score",
    "prequential_score",
    "score_step",
]
