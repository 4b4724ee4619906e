"""Gibbs rule against the penalized variational solver on random instances."""

import math

import numpy as np
import pytest

from app.core.core_gibbs import apply_data_shift, apply_loss_scaling, gibbs_update, optimal_value, sequential_update
from app.core.core_numerics import AtomLosses, Distribution, ParamGrid, total_variation
from app.services.variational.domain import KL, objective, solve_penalized


def _random_instance(rng: np.random.Generator) -> tuple[Distribution, np.ndarray, float]:
    m = int(rng.integers(2, 51))
    grid = ParamGrid.from_points(np.arange(m, dtype=float))
    baseline = Distribution.from_weights(grid, rng.dirichlet(np.ones(m)))
    return baseline, rng.uniform(0.0, 5.0, m), float(rng.uniform(0.1, 5.0))


@pytest.mark.slow
def test_solver_matches_closed_form_on_200_instances() -> None:
    rng = np.random.default_rng(20240601)
    for _ in range(200):
        baseline, losses, eta = _random_instance(rng)
        gibbs = gibbs_update(baseline, losses, eta)
        report = solve_penalized(baseline, losses, eta, KL)
        assert report.converged
        assert total_variation(report.solution, gibbs.posterior) <= 1e-8
        assert abs(report.objective - optimal_value(gibbs, eta)) <= 1e-8
        assert objective(gibbs.posterior, losses, eta, KL, baseline) == pytest.approx(-gibbs.log_normalizer / eta, abs=1e-10)


def test_batching_over_100_random_splits() -> None:
    rng = np.random.default_rng(11)
    for _ in range(100):
        m = int(rng.integers(2, 21))
        prior = Distribution.from_weights(ParamGrid.from_points(np.arange(m, dtype=float)), rng.dirichlet(np.ones(m)))
        per_datum = rng.uniform(0.0, 3.0, size=(m, int(rng.integers(2, 30))))
        cuts = np.sort(rng.choice(np.arange(1, per_datum.shape[1]), size=int(rng.integers(1, per_datum.shape[1])), replace=False))
        blocks = [chunk.sum(axis=1) for chunk in np.split(per_datum, cuts, axis=1)]
        eta = float(rng.uniform(0.1, 3.0))

        staged = sequential_update(prior, blocks, eta)
        one_shot = gibbs_update(prior, per_datum.sum(axis=1), eta)
        assert total_variation(staged.posterior, one_shot.posterior) <= 1e-12
        assert staged.log_normalizer == pytest.approx(one_shot.log_normalizer, abs=1e-9)


def test_random_data_only_shifts() -> None:
    rng = np.random.default_rng(12)
    for _ in range(100):
        m = int(rng.integers(2, 21))
        prior = Distribution.from_weights(ParamGrid.from_points(np.arange(m, dtype=float)), rng.dirichlet(np.ones(m)))
        losses = AtomLosses(values=rng.uniform(0.0, 10.0, m))
        eta = float(rng.uniform(0.1, 3.0))
        c = float(rng.uniform(-1e6, 1e6))

        base = gibbs_update(prior, losses, eta)
        shifted = gibbs_update(prior, apply_data_shift(losses, c), eta)
        assert total_variation(base.posterior, shifted.posterior) <= 1e-12
        assert shifted.log_normalizer - base.log_normalizer == pytest.approx(-eta * c, rel=1e-12, abs=1e-9)
        assert shifted.anchored_log_normalizer == pytest.approx(base.anchored_log_normalizer, abs=1e-9)


def test_random_loss_rescalings() -> None:
    rng = np.random.default_rng(13)
    for _ in range(100):
        m = int(rng.integers(2, 21))
        prior = Distribution.uniform(ParamGrid.from_points(np.arange(m, dtype=float)))
        losses = rng.uniform(0.0, 10.0, m)
        eta = float(rng.uniform(0.1, 3.0))
        a = float(math.exp(rng.uniform(-3.0, 3.0)))

        scaled_losses, scaled_eta = apply_loss_scaling(losses, eta, a)
        base = gibbs_update(prior, losses, eta)
        rescaled = gibbs_update(prior, scaled_losses, scaled_eta)
        assert total_variation(base.posterior, rescaled.posterior) <= 1e-12
        assert rescaled.log_normalizer == pytest.approx(base.log_normalizer, abs=1e-9)
