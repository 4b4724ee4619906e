import math

import numpy as np
import pytest

from app.core.core_gibbs import gibbs_update
from app.core.core_numerics import Dataset, Distribution, NonFiniteLossError, ParamGrid, SampleGrid, total_variation
from app.services.bayesianity.config import DiagnosticSettings
from app.services.bayesianity.domain import (
    NotBeliefPosteriorError,
    PartitionOverflowError,
    Verdict,
    affine_loss,
    extract_likelihood,
    implied_log_loss,
    log_partition,
    partition_function_curve,
)
from app.shared.experiment import LossSpec, bernoulli_loglik, build_loss_model, gaussian_loglik, gaussian_scale

Y_GRID = SampleGrid.trapezoid(-8.0, 8.0, 0.01)
THETA = ParamGrid.from_points([-1.0, 0.0, 1.0])


def _bernoulli_log_density(atoms: np.ndarray, records: np.ndarray) -> np.ndarray:
    theta = atoms[:, :1]
    x = records[:, 0][None, :]
    return np.where(x > 0.5, np.log(theta), np.log1p(-theta))


class TestLogPartition:
    def test_gaussian_location_family(self) -> None:
        for eta in (1.0, 2.0, 4.0):
            log_a = log_partition(gaussian_loglik(), eta, THETA, Y_GRID)
            expected = 0.5 * math.log(2.0 * math.pi / eta) - 0.5 * eta * math.log(2.0 * math.pi)
            np.testing.assert_allclose(log_a, np.full(3, expected), atol=1e-10)

    def test_off_support_atoms_do_not_raise(self) -> None:
        grid = ParamGrid.from_points([0.0, 0.5])
        binary = SampleGrid.from_points([0.0, 1.0])
        log_a = log_partition(bernoulli_loglik(), 1.0, grid, binary, support=np.array([False, True]))
        assert log_a[1] == pytest.approx(0.0, abs=1e-15)
        # θ = 0 cannot produce x = 1, so only x = 0 contributes
        assert log_a[0] == pytest.approx(0.0, abs=1e-15)


class TestPartitionFunctionCurve:
    def test_gaussian_log_loss_is_belief_posterior(self) -> None:
        report = partition_function_curve(gaussian_loglik(), 1.0, THETA, Y_GRID)
        assert report.verdict is Verdict.BELIEF
        np.testing.assert_allclose(report.A_values, 1.0, atol=1e-4)
        assert report.quadrature_error_estimate <= 1e-4
        assert "sample grid" in report.caveat

    def test_scale_loss_is_decision_posterior(self) -> None:
        xs = SampleGrid.trapezoid(-30.0, 30.0, 0.01)
        report = partition_function_curve(gaussian_scale(), 1.0, ParamGrid.from_points([1.0, 2.0]), xs)
        assert report.verdict is Verdict.DECISION
        assert report.A_values[0] == pytest.approx(math.sqrt(2 * math.pi), rel=1e-6)
        assert report.A_values[1] / report.A_values[0] == pytest.approx(2.0, rel=0.01)
        assert report.max_rel_variation >= 0.5

    def test_constant_shift_rescales_A_but_not_variation(self) -> None:
        plain = partition_function_curve(gaussian_scale(), 1.0, ParamGrid.from_points([1.0, 1.5]), Y_GRID)
        shifted_loss = build_loss_model(LossSpec.model_validate({"name": "gaussian-scale", "shift": {"constant": 0.7}}))
        shifted = partition_function_curve(shifted_loss, 1.0, ParamGrid.from_points([1.0, 1.5]), Y_GRID)
        np.testing.assert_allclose(shifted.log_A_values, plain.log_A_values - 0.7, atol=1e-12)
        assert shifted.max_rel_variation == pytest.approx(plain.max_rel_variation, rel=1e-12)

    def test_discrete_grid_has_zero_error(self) -> None:
        xs = SampleGrid.from_points([0.0, 1.0])
        report = partition_function_curve(bernoulli_loglik(), 1.0, ParamGrid.from_points([0.3, 0.7]), xs)
        assert report.quadrature_error_estimate == 0.0
        assert report.verdict is Verdict.BELIEF
        np.testing.assert_allclose(report.A_values, 1.0, atol=1e-15)

    def test_coarse_grid_is_inconclusive(self) -> None:
        xs = SampleGrid.trapezoid(-3.0, 3.0, 1.0)
        report = partition_function_curve(gaussian_loglik(), 1.0, ParamGrid.from_points([0.0, 0.5]), xs)
        assert report.verdict is Verdict.INCONCLUSIVE

    def test_thresholds_come_from_settings(self) -> None:
        xs = SampleGrid.trapezoid(-30.0, 30.0, 0.01)
        loose = DiagnosticSettings(DIAGNOSTIC_REL_TOL=2.0)
        report = partition_function_curve(gaussian_scale(), 1.0, ParamGrid.from_points([1.0, 2.0]), xs, settings=loose)
        assert report.verdict is Verdict.BELIEF

    def test_overflow_is_an_error(self) -> None:
        loss = affine_loss(lambda atoms, records: 800.0 + 0.0 * atoms[:, :1] * records[:, 0][None, :], 1.0)
        with pytest.raises(PartitionOverflowError):
            partition_function_curve(loss, 1.0, ParamGrid.from_points([0.0]), SampleGrid.from_points([0.0, 1.0]))

    def test_non_finite_loss_is_an_error(self) -> None:
        with pytest.raises(NonFiniteLossError):
            partition_function_curve(gaussian_scale(), 1.0, ParamGrid.from_points([0.0, 1.0]), Y_GRID)


class TestExtractLikelihood:
    def test_gaussian_table_matches_normal_pdf(self) -> None:
        table = extract_likelihood(gaussian_loglik(), 1.0, THETA, Y_GRID)
        y = Y_GRID.nodes[:, 0]
        expected = np.exp(-0.5 * (y[None, :] - THETA.atoms) ** 2) / math.sqrt(2 * math.pi)
        assert np.abs(table.density - expected).max() <= max(table.report.quadrature_error_estimate, 1e-12)
        np.testing.assert_allclose(table.row_masses(), 1.0, atol=1e-10)

    def test_bernoulli_pmf(self) -> None:
        params = ParamGrid.from_points([0.3, 0.7])
        table = extract_likelihood(bernoulli_loglik(), 1.0, params, SampleGrid.from_points([0.0, 1.0]))
        np.testing.assert_allclose(table.density, [[0.7, 0.3], [0.3, 0.7]], atol=1e-15)

    def test_scale_loss_is_refused(self) -> None:
        with pytest.raises(NotBeliefPosteriorError) as info:
            extract_likelihood(gaussian_scale(), 1.0, ParamGrid.from_points([1.0, 2.0]), Y_GRID)
        assert info.value.verdict == "decision-posterior"

    def test_round_trip_reproduces_the_update(self) -> None:
        rng = np.random.default_rng(3)
        data = Dataset(records=rng.normal(0.3, 1.0, 40))
        prior = Distribution.from_weights(THETA, [0.2, 0.5, 0.3])
        loss = gaussian_loglik()
        table = extract_likelihood(loss, 1.0, THETA, Y_GRID)
        original = gibbs_update(prior, loss.evaluate(THETA, data).cumulative(), 1.0)
        implied = gibbs_update(prior, implied_log_loss(loss, 1.0, table, data), 1.0)
        assert total_variation(original.posterior, implied.posterior) <= 1e-10


class TestAffineDetection:
    def test_affine_losses_stay_belief_posteriors(self) -> None:
        rng = np.random.default_rng(17)
        params = ParamGrid.from_points([0.2, 0.5, 0.9])
        xs = SampleGrid.from_points([0.0, 1.0])
        for _ in range(20):
            eta = float(rng.uniform(0.1, 5.0))
            a, b = rng.normal(size=2)

            def shift(records: np.ndarray, a: float = float(a), b: float = float(b)) -> np.ndarray:
                return a + b * records[:, 0]

            loss = affine_loss(_bernoulli_log_density, eta, shift)
            report = partition_function_curve(loss, eta, params, xs)
            assert report.verdict is Verdict.BELIEF
            table = extract_likelihood(loss, eta, params, xs)
            np.testing.assert_allclose(table.density[:, 1], [0.2, 0.5, 0.9], atol=1e-12)
