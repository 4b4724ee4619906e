import numpy as np
import pytest

from app.core.core_gibbs import gibbs_update
from app.core.core_numerics import Dataset, Distribution, ParamGrid, SampleGrid, total_variation
from app.services.recipe.domain import check_separability, choose_loss, run_recipe_pipeline
from app.services.variational.domain import KL
from app.shared.experiment import ConfigSemanticsError, check, gaussian_loglik, squared

VARIANCE_FOUR = Dataset(records=np.array([-1.0, 3.0, -1.0, 3.0]))
PRIOR = Distribution.uniform(ParamGrid.linspace(-2.0, 4.0, 13))


class TestChooseLoss:
    def test_units_and_scale(self) -> None:
        choice = choose_loss(squared().scaled(3.0))
        assert choice.scale == 3.0
        assert choice.units == "squared outcome units per datum"
        assert choice.has_gradient

    def test_check_loss_has_no_gradient(self) -> None:
        assert not choose_loss(check(0.25)).has_gradient


class TestSeparability:
    def test_kl_penalty_and_batching_are_coherent(self) -> None:
        result = check_separability(PRIOR, squared(), VARIANCE_FOUR, 0.25, 3)
        assert result.penalty == "KL"
        assert abs(result.product_gap) <= 1e-12 * max(1.0, result.block_divergence)
        assert result.block_divergence > 0.0
        assert result.blocks == 3
        assert result.batching_tv <= 1e-12
        assert result.coherent

    def test_additivity_uses_the_block_posteriors_of_the_data(self) -> None:
        eta = 0.25
        result = check_separability(PRIOR, squared(), VARIANCE_FOUR, eta, 2)
        matrix = squared().evaluate(PRIOR.grid, VARIANCE_FOUR)
        first, second = (gibbs_update(PRIOR, block, eta).posterior for block in matrix.block_sums(2))
        expected = sum(float(KL.value(q.weights, PRIOR.weights)) for q in (first, second))
        assert result.block_divergence == pytest.approx(expected, rel=1e-12)
        flat = check_separability(PRIOR, squared(), Dataset(records=np.array([1.0, 1.0])), 1e-9, 2)
        assert flat.block_divergence < 1e-12 < result.block_divergence

    def test_blocks_capped_by_data_size(self) -> None:
        assert check_separability(PRIOR, squared(), VARIANCE_FOUR, 1.0, 10).blocks == 4


class TestRunRecipePipeline:
    def test_info_matching(self) -> None:
        outcome = run_recipe_pipeline(PRIOR, squared(), VARIANCE_FOUR)
        assert outcome.update.calibration.eta_hat.eta == pytest.approx(0.25)
        assert outcome.update.result.eta.eta == pytest.approx(0.25)
        assert outcome.diagnostic is None
        items = [entry.item for entry in outcome.checklist]
        assert items == [
            "loss and units",
            "learning rate",
            "interpretation",
            "separability",
            "model comparison",
            "normalization conventions",
        ]
        assert "info-matching" in outcome.checklist[1].value
        assert outcome.checklist[2].value.startswith("not checked")

    def test_loss_scaling_leaves_the_calibrated_posterior_unchanged(self) -> None:
        base = run_recipe_pipeline(PRIOR, squared(), VARIANCE_FOUR)
        scaled = run_recipe_pipeline(PRIOR, squared().scaled(2.0), VARIANCE_FOUR)
        assert scaled.update.calibration.eta_hat.eta == pytest.approx(base.update.calibration.eta_hat.eta / 2.0)
        assert total_variation(scaled.update.result.posterior, base.update.result.posterior) <= 1e-12

    def test_belief_verdict_with_sample_grid(self) -> None:
        prior = Distribution.uniform(ParamGrid.from_points([-1.0, 0.0, 1.0]))
        outcome = run_recipe_pipeline(
            prior,
            gaussian_loglik(),
            Dataset(records=np.array([-1.0, 1.0, -1.0, 1.0])),
            sample_grid=SampleGrid.trapezoid(-8.0, 8.0, 0.01),
        )
        assert outcome.update.calibration.eta_hat.eta == pytest.approx(1.0)
        assert outcome.diagnostic is not None
        assert outcome.diagnostic.verdict.value == "belief-posterior"
        assert outcome.checklist[2].value.startswith("belief posterior")

    def test_safebayes(self) -> None:
        outcome = run_recipe_pipeline(
            PRIOR,
            check(0.5),
            VARIANCE_FOUR,
            calibration="safebayes",
            eta_grid=[0.5, 1.0],
            sample_grid=SampleGrid.trapezoid(-40.0, 40.0, 0.05),
        )
        assert outcome.update.safebayes is not None
        assert outcome.update.calibration.method == "safebayes"
        assert outcome.update.calibration.eta_hat.eta in (0.5, 1.0)
        assert not outcome.loss.has_gradient

    def test_safebayes_needs_sample_grid(self) -> None:
        with pytest.raises(ConfigSemanticsError) as info:
            run_recipe_pipeline(PRIOR, check(0.5), VARIANCE_FOUR, calibration="safebayes")
        assert info.value.details[0]["field"] == "recipe.sample_grid"
