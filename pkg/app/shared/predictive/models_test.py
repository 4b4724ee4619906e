import numpy as np
import pytest

from app.core.core_numerics import Distribution, GridMismatchError, ParamGrid
from app.shared.predictive import (
    InvalidPredictiveError,
    OutcomeGrid,
    OutcomeOffGridError,
    PredictiveFamily,
    UnsortedOutcomeGridError,
    bernoulli_family,
    gaussian_family,
    gaussian_scale_family,
    induced_predictive,
)


def _bernoulli() -> PredictiveFamily:
    return bernoulli_family(ParamGrid.from_points([0.3, 0.7]))


class TestInducedPredictive:
    def test_point_mass_returns_row(self) -> None:
        family = _bernoulli()
        posterior = Distribution.point_mass(ParamGrid.from_points([0.3, 0.7]), 1)
        np.testing.assert_array_equal(induced_predictive(posterior, family).values, [0.3, 0.7])

    def test_uniform_mixture(self) -> None:
        posterior = Distribution.uniform(ParamGrid.from_points([0.3, 0.7]))
        np.testing.assert_allclose(induced_predictive(posterior, _bernoulli()).values, [0.5, 0.5], atol=1e-15)

    def test_weighted_mixture(self) -> None:
        posterior = Distribution.from_weights(ParamGrid.from_points([0.3, 0.7]), [0.75, 0.25])
        predictive = induced_predictive(posterior, _bernoulli())
        assert predictive.values[1] == pytest.approx(0.4, abs=1e-15)
        assert predictive.mass == pytest.approx(1.0, abs=1e-12)

    def test_rejects_misaligned_grid(self) -> None:
        posterior = Distribution.uniform(ParamGrid.from_points([0.1, 0.5, 0.9]))
        with pytest.raises(GridMismatchError):
            induced_predictive(posterior, _bernoulli())


class TestPredictiveFamily:
    def test_rejects_rows_that_do_not_normalize(self) -> None:
        with pytest.raises(InvalidPredictiveError):
            PredictiveFamily(outcome_grid=OutcomeGrid.discrete_points([0.0, 1.0]), density_table=np.array([[0.5, 0.6]]))

    def test_gaussian_rows_integrate_to_one(self) -> None:
        grid = OutcomeGrid.trapezoid(-8.0, 8.0, 0.01)
        family = gaussian_family(ParamGrid.from_points([-1.0, 0.0, 1.0]), grid)
        np.testing.assert_allclose(family.density_table @ grid.weights, 1.0, atol=1e-12)
        assert family.density_table[1, 800] == pytest.approx(1.0 / np.sqrt(2.0 * np.pi), rel=1e-6)

    def test_gaussian_scale_rows(self) -> None:
        grid = OutcomeGrid.trapezoid(-20.0, 20.0, 0.01)
        family = gaussian_scale_family(ParamGrid.from_points([1.0, 2.0]), grid)
        np.testing.assert_allclose(family.density_table @ grid.weights, 1.0, atol=1e-12)


class TestOutcomeGrid:
    def test_exact_node(self) -> None:
        assert OutcomeGrid.discrete_points([0.0, 1.0]).locate(1.0) == (1, False)

    def test_snaps_within_half_step(self) -> None:
        grid = OutcomeGrid.trapezoid(0.0, 1.0, 0.1)
        index, snapped = grid.locate(0.33)
        assert snapped
        assert grid.nodes[index] == pytest.approx(0.3)

    def test_rejects_far_outcome(self) -> None:
        with pytest.raises(OutcomeOffGridError):
            OutcomeGrid.trapezoid(0.0, 1.0, 0.1).locate(2.0)

    def test_unsorted(self) -> None:
        grid = OutcomeGrid(nodes=np.array([1.0, 0.0]), weights=np.ones(2), discrete=True)
        with pytest.raises(UnsortedOutcomeGridError):
            grid.require_sorted()
