from .settings import ScoringSettings, get_scoring_settings

__all__ = ["ScoringSettings", "get_scoring_settings"]
