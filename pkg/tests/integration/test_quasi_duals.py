"""EL/ET dual solutions against direct simplex optimization."""

import math

import numpy as np
import pytest

from app.core.core_numerics import Dataset, Distribution, ParamGrid
from app.services.quasiposterior.domain import (
    brute_force_weights,
    convention_offset_check,
    el_weights,
    et_weights,
    mean_moments,
    zero_in_interior,
)


def _instances() -> list[np.ndarray]:
    rng = np.random.default_rng(41)
    out: list[np.ndarray] = []
    for n in range(2, 9):
        for _ in range(15):
            x = rng.normal(size=n)
            gmat = (x - rng.uniform(x.min(), x.max())).reshape(-1, 1)
            if zero_in_interior(gmat):
                out.append(gmat)
    return out


@pytest.mark.slow
@pytest.mark.parametrize("criterion", ["el", "et"])
def test_duals_match_brute_force(criterion: str) -> None:
    solve = el_weights if criterion == "el" else et_weights
    for gmat in _instances():
        dual = solve(gmat)
        direct = brute_force_weights(gmat, criterion)  # type: ignore[arg-type]
        assert dual.converged
        assert dual.criterion == pytest.approx(direct.criterion, abs=1e-6)
        assert direct.converged
        np.testing.assert_allclose(dual.weights, direct.weights, atol=1e-6)


def test_three_point_el_instance() -> None:
    solution = el_weights(np.array([[-0.5], [0.5], [0.5]]))
    np.testing.assert_allclose(solution.weights, [0.5, 0.25, 0.25], atol=1e-9)
    assert solution.multiplier[0] == pytest.approx(2.0 / 3.0, abs=1e-9)
    assert solution.criterion == pytest.approx(-0.169899, abs=1e-6)
    assert solution.criterion == pytest.approx(math.log(1.5) + 2.0 * math.log(0.75), abs=1e-9)


def test_convention_offsets() -> None:
    data = Dataset(records=np.array([0.0, 1.0, 1.0, 0.4, 0.9]))
    grid = ParamGrid.from_points([0.25, 0.5, 0.75])
    el, et = convention_offset_check(data, mean_moments(), grid, Distribution.uniform(grid), 1.0)
    n = data.size
    assert el.offset == n * math.log(n)
    assert et.offset == math.log(n)
    for comparison in (el, et):
        assert comparison.max_offset_error <= 1e-9
        assert comparison.tv <= 1e-12
        assert comparison.delta_log_Z == pytest.approx(comparison.expected_delta_log_Z, abs=1e-9)
        assert comparison.feasible_atoms == 3
