"""Prequential scores ignore data-only loss shifts; log Z does not."""

import numpy as np
import pytest

from app.core.core_gibbs import gibbs_update
from app.core.core_numerics import Dataset, Distribution, FloatArray, ParamGrid
from app.services.scoring.domain import delta_lpd, prequential_score
from app.shared.experiment import bernoulli_loglik, gaussian_loglik
from app.shared.predictive import OutcomeGrid, bernoulli_family, gaussian_family

Y_GRID = OutcomeGrid.trapezoid(-8.0, 8.0, 0.01)


@pytest.mark.parametrize("rule", ["log", "crps"])
def test_random_shifts_leave_traces_identical(rule: str) -> None:
    rng = np.random.default_rng(31)
    grid = ParamGrid.linspace(-2.0, 2.0, 17)
    prior = Distribution.uniform(grid)
    family = gaussian_family(grid, Y_GRID)
    loss = gaussian_loglik()
    for _ in range(10):
        data = Dataset(records=np.round(rng.normal(rng.uniform(-1.0, 1.0), 1.0, size=30), 2))
        a, b = rng.normal(scale=5.0, size=2)

        def shift(records: FloatArray, a: float = float(a), b: float = float(b)) -> FloatArray:
            return a + b * records[:, 0] ** 3

        eta = float(rng.uniform(0.2, 2.0))
        base = prequential_score(prior, loss, eta, family, data, rule)  # type: ignore[arg-type]
        shifted = prequential_score(prior, loss.shifted(shift), eta, family, data, rule)  # type: ignore[arg-type]
        assert np.abs(base.per_step_scores - shifted.per_step_scores).max() <= 1e-12
        assert delta_lpd(shifted, base) == 0.0

        matrix = loss.evaluate(grid, data)
        moved = loss.shifted(shift).evaluate(grid, data)
        log_z = gibbs_update(prior, matrix.cumulative(), eta).log_normalizer
        log_z_shifted = gibbs_update(prior, moved.cumulative(), eta).log_normalizer
        assert log_z_shifted - log_z == pytest.approx(-eta * float(shift(data.records).sum()), rel=1e-9, abs=1e-9)


@pytest.mark.slow
def test_delta_lpd_prefers_the_well_specified_model() -> None:
    wins = 0
    full = ParamGrid.linspace(0.05, 0.95, 19)
    narrow = ParamGrid.linspace(0.05, 0.25, 5)
    loss = bernoulli_loglik()
    for seed in range(100):
        rng = np.random.default_rng(seed)
        data = Dataset(records=rng.binomial(1, 0.7, size=200).astype(float))
        good = prequential_score(Distribution.uniform(full), loss, 1.0, bernoulli_family(full), data, "log")
        bad = prequential_score(Distribution.uniform(narrow), loss, 1.0, bernoulli_family(narrow), data, "log")
        wins += delta_lpd(good, bad) > 0.0
    assert wins >= 95
