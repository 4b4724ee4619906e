import math

import numpy as np
import pytest

from app.core.core_numerics import Distribution, ParamGrid
from app.services.variational.domain import (
    CHI_SQUARED,
    KL,
    REVERSE_KL,
    SQUARED_HELLINGER,
    DivergenceSpec,
    InvalidDivergenceError,
    divergence,
    get_divergence,
    kl_family,
    product_additivity_gap,
)

GRID = ParamGrid.from_points([0.0, 1.0])
UNIFORM = Distribution.uniform(GRID)
TILTED = Distribution.from_weights(GRID, [0.75, 0.25])


class TestDivergenceSpec:
    def test_phi_must_vanish_at_one(self) -> None:
        with pytest.raises(InvalidDivergenceError):
            DivergenceSpec(name="bad", phi=lambda t: t, dphi=lambda t: np.ones_like(t))

    def test_phi_must_be_convex(self) -> None:
        with pytest.raises(InvalidDivergenceError):
            DivergenceSpec(name="concave", phi=lambda t: -((t - 1.0) ** 2), dphi=lambda t: -2.0 * (t - 1.0))

    def test_unknown_name(self) -> None:
        with pytest.raises(InvalidDivergenceError):
            get_divergence("total-variation")

    def test_kl_family_needs_positive_c(self) -> None:
        with pytest.raises(InvalidDivergenceError):
            kl_family(c=0.0)


class TestDivergenceValues:
    def test_zero_at_baseline(self) -> None:
        for div in (KL, REVERSE_KL, CHI_SQUARED, SQUARED_HELLINGER, kl_family(2.0, 1.0)):
            assert divergence(div, UNIFORM, UNIFORM) == pytest.approx(0.0, abs=1e-15)

    def test_kl_closed_form(self) -> None:
        expected = 0.75 * math.log(1.5) + 0.25 * math.log(0.5)
        assert divergence(KL, TILTED, UNIFORM) == pytest.approx(expected, abs=1e-15)

    def test_zero_weight_atom_uses_limit(self) -> None:
        point = Distribution.point_mass(GRID, 0)
        assert divergence(KL, point, UNIFORM) == pytest.approx(math.log(2.0))
        assert divergence(CHI_SQUARED, point, UNIFORM) == pytest.approx(1.0)
        assert divergence(REVERSE_KL, point, UNIFORM) == math.inf

    def test_mass_outside_baseline_support_is_infinite(self) -> None:
        baseline = Distribution.point_mass(GRID, 0)
        assert divergence(KL, UNIFORM, baseline) == math.inf
        assert divergence(KL, baseline, baseline) == 0.0


class TestProductAdditivityGap:
    def test_chi_squared_canonical_witness(self) -> None:
        gap = product_additivity_gap(CHI_SQUARED, TILTED, UNIFORM, TILTED, UNIFORM)
        assert gap == pytest.approx(0.0625, abs=1e-10)

    def test_squared_hellinger_is_not_additive(self) -> None:
        gap = product_additivity_gap(SQUARED_HELLINGER, TILTED, UNIFORM, TILTED, UNIFORM)
        assert gap == pytest.approx(-0.0023221, abs=1e-6)
        assert abs(gap) > 1e-6

    def test_kl_and_reverse_kl_are_additive(self) -> None:
        rng = np.random.default_rng(11)
        for _ in range(20):
            m1, m2 = rng.integers(2, 6, size=2)
            g1 = ParamGrid.from_points(np.arange(m1, dtype=float))
            g2 = ParamGrid.from_points(np.arange(m2, dtype=float))
            q1, p1 = (Distribution.from_weights(g1, rng.dirichlet(np.ones(m1))) for _ in range(2))
            q2, p2 = (Distribution.from_weights(g2, rng.dirichlet(np.ones(m2))) for _ in range(2))
            for div in (KL, REVERSE_KL, kl_family(3.0, -2.0)):
                assert abs(product_additivity_gap(div, q1, p1, q2, p2)) <= 1e-12

    def test_baseline_factor_gives_zero_gap(self) -> None:
        for div in (CHI_SQUARED, SQUARED_HELLINGER):
            assert product_additivity_gap(div, UNIFORM, UNIFORM, TILTED, UNIFORM) == pytest.approx(0.0, abs=1e-15)
