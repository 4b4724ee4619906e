import logging
import math
from collections.abc import Iterator

import numpy as np
import pytest

from app.core.core_numerics import Dataset, Distribution, FloatArray, LossModel, ParamGrid, SampleGrid
from app.services.calibration.domain import safebayes_calibration, safebayes_select
from app.shared.experiment import ConfigSemanticsError, bernoulli_loglik, check, squared
from app.shared.predictive import bernoulli_family

GRID = ParamGrid.from_points([0.3, 0.7])
PRIOR = Distribution.uniform(GRID)
DATA = Dataset(records=np.array([1.0, 1.0, 0.0]))
BINARY = SampleGrid.from_points([0.0, 1.0])
REAL_LINE = SampleGrid.trapezoid(-40.0, 40.0, 0.05)


@pytest.fixture
def app_log(caplog: pytest.LogCaptureFixture) -> Iterator[pytest.LogCaptureFixture]:
    logger = logging.getLogger("app_logger")
    logger.addHandler(caplog.handler)
    try:
        yield caplog
    finally:
        logger.removeHandler(caplog.handler)


def _constant(atoms: FloatArray, records: FloatArray) -> FloatArray:
    return np.ones((atoms.shape[0], records.shape[0]))


class TestSafeBayesSelect:
    def test_constant_loss_ties_to_smallest_eta(self, app_log: pytest.LogCaptureFixture) -> None:
        loss = LossModel(name="constant", pointwise=_constant)
        with app_log.at_level("INFO", logger="app_logger"):
            report = safebayes_select(PRIOR, loss, DATA, [2.0, 0.5, 1.0], sample_grid=BINARY)
        assert report.etas == (0.5, 1.0, 2.0)
        assert report.eta_star.eta == 0.5
        np.testing.assert_allclose(report.excess_criteria, np.full(3, 3.0 * math.log(2.0)), rtol=1e-12)
        assert "SafeBayes wählt η=0.5" in app_log.text

    def test_expected_loss_by_hand(self) -> None:
        report = safebayes_select(PRIOR, bernoulli_loglik(), DATA, [1.0], criterion="expected-loss")
        lo, hi = -math.log(0.3), -math.log(0.7)
        third = np.array([0.09, 0.49]) / 0.58
        expected = 0.5 * (lo + hi) + (0.3 * lo + 0.7 * hi) + (third[0] * hi + third[1] * lo)
        assert report.criterion == "expected-loss"
        assert report.excess_criteria[0] == pytest.approx(expected, rel=1e-12)

    def test_constant_offset_does_not_move_the_choice(self) -> None:
        data = Dataset(records=np.array([0.3, -1.2, 2.5, 0.8, 0.0, 1.7]))
        prior = Distribution.uniform(ParamGrid.linspace(-2.0, 3.0, 11))
        etas = [0.25, 0.5, 1.0, 2.0]
        base = safebayes_select(prior, squared(), data, etas, criterion="expected-loss")
        shifted = safebayes_select(
            prior, squared().shifted(lambda r: np.full(r.shape[0], 7.0)), data, etas, criterion="expected-loss"
        )
        assert shifted.eta_star.eta == base.eta_star.eta
        assert np.array_equal(shifted.excess_criteria, base.excess_criteria)
        assert shifted.offset_total == pytest.approx(42.0)
        assert np.abs((shifted.criteria - base.criteria) - 42.0).max() <= 1e-12

    def test_implied_log_loss_by_hand(self) -> None:
        report = safebayes_select(PRIOR, bernoulli_loglik(), DATA, [1.0, 2.0], sample_grid=BINARY)
        lo, hi = -math.log(0.3), -math.log(0.7)
        # η = 1: a normalized log-likelihood is its own implied density
        third = np.array([0.09, 0.49]) / 0.58
        at_one = 0.5 * (lo + hi) + (0.3 * lo + 0.7 * hi) + (third[0] * hi + third[1] * lo)
        # η = 2: A(θ) = θ² + (1 − θ)² = 0.58 on both atoms
        second = np.array([0.09, 0.49]) / 0.58
        third = np.array([0.0081, 0.2401]) / 0.2482
        at_two = 2.0 * (0.5 * (lo + hi) + (second[0] * lo + second[1] * hi) + (third[0] * hi + third[1] * lo))
        at_two += 3.0 * math.log(0.58)
        assert report.criterion == "implied-log-loss"
        assert report.offset_total == 0.0
        np.testing.assert_allclose(report.excess_criteria, [at_one, at_two], rtol=1e-12)
        assert report.eta_star.eta == (1.0 if at_one <= at_two else 2.0)

    def test_implied_log_loss_ignores_data_only_shift(self) -> None:
        data = Dataset(records=np.array([0.3, -1.2, 2.5, 0.8, 0.0, 1.7]))
        prior = Distribution.uniform(ParamGrid.linspace(-2.0, 3.0, 11))
        etas = [0.25, 0.5, 1.0, 2.0]
        base = safebayes_select(prior, squared(), data, etas, sample_grid=REAL_LINE)
        shifted = safebayes_select(
            prior, squared().shifted(lambda r: 3.0 * r[:, 0]), data, etas, sample_grid=REAL_LINE
        )
        assert shifted.eta_star.eta == base.eta_star.eta
        assert np.array_equal(shifted.excess_criteria, base.excess_criteria)

    def test_implied_log_loss_needs_sample_grid(self) -> None:
        with pytest.raises(ConfigSemanticsError) as info:
            safebayes_select(PRIOR, bernoulli_loglik(), DATA, [1.0])
        assert info.value.details[0]["field"] == "calibrate.sample_grid"

    def test_predictive_log_loss(self) -> None:
        report = safebayes_select(
            PRIOR, bernoulli_loglik(), DATA, [1.0], family=bernoulli_family(GRID), criterion="predictive-log-loss"
        )
        assert report.excess_criteria[0] == pytest.approx(2.253795, abs=1e-6)
        assert report.offset_total == 0.0

    def test_predictive_log_loss_needs_family(self) -> None:
        with pytest.raises(ConfigSemanticsError):
            safebayes_select(PRIOR, bernoulli_loglik(), DATA, [1.0], criterion="predictive-log-loss")

    def test_empty_grid(self) -> None:
        with pytest.raises(ConfigSemanticsError):
            safebayes_select(PRIOR, bernoulli_loglik(), DATA, [])

    def test_parallel_matches_sequential(self) -> None:
        etas = [0.25, 0.5, 1.0, 2.0]
        sequential = safebayes_select(PRIOR, bernoulli_loglik(), DATA, etas, sample_grid=BINARY)
        parallel = safebayes_select(PRIOR, bernoulli_loglik(), DATA, etas, sample_grid=BINARY, workers=4)
        assert np.array_equal(parallel.excess_criteria, sequential.excess_criteria)


class TestSafeBayesCalibration:
    def test_with_gradient(self) -> None:
        selection = safebayes_select(PRIOR, bernoulli_loglik(), DATA, [0.5, 1.0], sample_grid=BINARY)
        report = safebayes_calibration(selection, bernoulli_loglik(), DATA, grid=GRID)
        assert report.method == "safebayes"
        assert report.eta_hat is selection.eta_star
        assert report.theta_hat[0] == pytest.approx(2.0 / 3.0, abs=1e-8)
        assert report.I_hat is not None

    def test_without_gradient(self) -> None:
        grid = ParamGrid.linspace(-1.0, 3.0, 9)
        data = Dataset(records=np.array([0.0, 1.0, 2.0]))
        prior = Distribution.uniform(grid)
        selection = safebayes_select(prior, check(0.5), data, [0.5, 1.0], sample_grid=REAL_LINE)
        report = safebayes_calibration(selection, check(0.5), data, grid=grid)
        assert report.I_hat is None and report.J_hat is None
        assert report.minimizer is not None and report.minimizer.method == "grid"
        assert report.theta_hat[0] == 1.0
