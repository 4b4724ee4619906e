"""Generalized-Bayes (Gibbs) update operator, batching and invariance helpers."""

from .models import GibbsResult, optimal_value
from .prequential import prequential_posteriors
from .update import apply_data_shift, apply_loss_scaling, gibbs_update, sequential_update

__all__ = [
    "GibbsResult",
    "apply_data_shift",
    "apply_loss_scaling",
    "gibbs_update",
    "optimal_value",
    "prequential_posteriors",
    "sequential_update",
]
