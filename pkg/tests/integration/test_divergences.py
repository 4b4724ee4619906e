"""Product additivity of f-divergences: only KL is additive among the non-trivial witnesses."""

import numpy as np
import pytest

from app.core.core_numerics import Distribution, ParamGrid
from app.services.variational.domain import CHI_SQUARED, KL, REVERSE_KL, SQUARED_HELLINGER, product_additivity_gap

TWO = ParamGrid.from_points([0.0, 1.0])
Q = Distribution.from_weights(TWO, [0.75, 0.25])
P = Distribution.uniform(TWO)


def _random(rng: np.random.Generator, m: int) -> Distribution:
    return Distribution.from_weights(ParamGrid.from_points(np.arange(m, dtype=float)), rng.dirichlet(np.ones(m)))


def test_kl_is_additive_on_100_random_products() -> None:
    rng = np.random.default_rng(7)
    for _ in range(100):
        m1, m2 = (int(v) for v in rng.integers(2, 9, size=2))
        gap = product_additivity_gap(KL, _random(rng, m1), _random(rng, m1), _random(rng, m2), _random(rng, m2))
        assert abs(gap) <= 1e-12


def test_chi_squared_canonical_gap() -> None:
    assert product_additivity_gap(CHI_SQUARED, Q, P, Q, P) == pytest.approx(0.0625, abs=1e-10)


def test_squared_hellinger_canonical_gap_is_nonzero() -> None:
    assert abs(product_additivity_gap(SQUARED_HELLINGER, Q, P, Q, P)) > 1e-6


def test_reverse_kl_is_additive_too() -> None:
    rng = np.random.default_rng(8)
    assert abs(product_additivity_gap(REVERSE_KL, Q, P, Q, P)) <= 1e-12
    for _ in range(20):
        gap = product_additivity_gap(REVERSE_KL, _random(rng, 3), _random(rng, 3), _random(rng, 4), _random(rng, 4))
        assert abs(gap) <= 1e-12
