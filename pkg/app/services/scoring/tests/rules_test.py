import logging
import math
from collections.abc import Iterator

import numpy as np
import pytest

from app.services.scoring.domain import crps, expected_score, log_score
from app.shared.predictive import OutcomeGrid, OutcomeOffGridError, Predictive, UnsortedOutcomeGridError

BINARY = OutcomeGrid.discrete_points([0.0, 1.0])


def _p(*values: float) -> Predictive:
    return Predictive(grid=BINARY, values=np.array(values))


@pytest.fixture
def app_log(caplog: pytest.LogCaptureFixture) -> Iterator[pytest.LogCaptureFixture]:
    logger = logging.getLogger("app_logger")
    logger.addHandler(caplog.handler)
    try:
        yield caplog
    finally:
        logger.removeHandler(caplog.handler)


class TestLogScore:
    def test_lookup(self) -> None:
        assert log_score(_p(0.5, 0.5), 1.0) == pytest.approx(-0.693147, abs=1e-6)
        assert log_score(_p(0.4, 0.6), 1.0) == math.log(0.6)

    def test_zero_mass_is_flagged(self, app_log: pytest.LogCaptureFixture) -> None:
        with app_log.at_level("WARNING", logger="app_logger"):
            assert log_score(_p(1.0, 0.0), 1.0, step=4) == -math.inf
        assert "−∞" in app_log.text

    def test_snaps_within_half_spacing(self, app_log: pytest.LogCaptureFixture) -> None:
        with app_log.at_level("INFO", logger="app_logger"):
            assert log_score(_p(0.4, 0.6), 0.9) == math.log(0.6)
        assert "gerundet" in app_log.text

    def test_off_grid(self) -> None:
        with pytest.raises(OutcomeOffGridError) as info:
            log_score(_p(0.4, 0.6), 2.0, step=3)
        assert info.value.code == "OUTCOME_OFF_GRID"

    def test_continuous_density(self) -> None:
        grid = OutcomeGrid.trapezoid(0.0, 1.0, 0.5)
        predictive = Predictive(grid=grid, values=np.array([1.0, 1.0, 1.0]))
        assert log_score(predictive, 0.5) == 0.0


class TestCrps:
    def test_worked_values(self) -> None:
        assert crps(_p(0.0, 1.0), 1.0) == 0.0
        assert crps(_p(1.0, 0.0), 1.0) == 1.0
        assert crps(_p(0.5, 0.5), 1.0) == pytest.approx(0.25)

    def test_nonnegative(self) -> None:
        rng = np.random.default_rng(2)
        grid = OutcomeGrid.discrete_points(np.arange(6.0))
        for _ in range(20):
            predictive = Predictive(grid=grid, values=rng.dirichlet(np.ones(6)))
            assert crps(predictive, float(rng.integers(0, 6))) >= 0.0

    def test_unsorted_grid(self) -> None:
        grid = OutcomeGrid.discrete_points([1.0, 0.0])
        with pytest.raises(UnsortedOutcomeGridError):
            crps(Predictive(grid=grid, values=np.array([0.5, 0.5])), 0.0)


class TestPropriety:
    def test_truth_is_optimal_on_a_grid_search(self) -> None:
        truth = np.array([0.3, 0.7])
        candidates = np.linspace(0.01, 0.99, 99)
        log_scores = [expected_score(_p(1.0 - p, p), truth, "log") for p in candidates]
        crps_scores = [expected_score(_p(1.0 - p, p), truth, "crps") for p in candidates]
        assert candidates[int(np.argmax(log_scores))] == pytest.approx(0.7)
        assert candidates[int(np.argmin(crps_scores))] == pytest.approx(0.7)

    def test_zero_mass_on_possible_outcome(self) -> None:
        assert expected_score(_p(1.0, 0.0), np.array([0.5, 0.5]), "log") == -math.inf
