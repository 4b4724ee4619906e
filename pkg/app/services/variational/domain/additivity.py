from __future__ import annotations

import numpy as np

from app.core.core_numerics import Distribution, GridMismatchError

from .divergences import DivergenceSpec


def _check_pair(q: Distribution, baseline: Distribution) -> None:
    if not q.grid.matches(baseline.grid):
        raise GridMismatchError(baseline.grid.size, q.grid.size)


def product_additivity_gap(
    div: DivergenceSpec,
    q1: Distribution,
    p1: Distribution,
    q2: Distribution,
    p2: Distribution,
) -> float:
    """D(q1⊗q2‖π1⊗π2) − D(q1‖π1) − D(q2‖π2) on the row-major product grid."""
    _check_pair(q1, p1)
    _check_pair(q2, p2)
    joint_q = np.outer(q1.weights, q2.weights).reshape(-1)
    joint_p = np.outer(p1.weights, p2.weights).reshape(-1)
    joint = float(div.value(joint_q, joint_p))
    first = float(div.value(q1.weights, p1.weights))
    second = float(div.value(q2.weights, p2.weights))
    return joint - first - second
