from __future__ import annotations

import math
from dataclasses import dataclass, field

from app.core.core_numerics import Distribution, Temperature


@dataclass(frozen=True, slots=True)
class GibbsResult:
    """Posterior of one generalized-Bayes update and its normalizers.

    ``log_normalizer`` is log Z including every data-only offset;
    ``anchored_log_normalizer`` is log Z̃ after subtracting the minimum loss
    over the active atoms and is never positive.
    """

    posterior: Distribution
    log_normalizer: float
    anchored_log_normalizer: float
    eta: Temperature
    min_loss: float
    excluded_atoms: tuple[int, ...] = field(default_factory=tuple)

    @property
    def normalizer(self) -> float:
        return math.exp(self.log_normalizer)

    @property
    def optimal_value(self) -> float:
        return optimal_value(self, self.eta)


def optimal_value(result: GibbsResult, eta: Temperature | float) -> float:
    """−(1/η)·log Z: the penalized objective attained by the Gibbs rule."""
    return -result.log_normalizer / Temperature.coerce(eta).eta
