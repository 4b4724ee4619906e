"""Log-space simplex primitives shared by every module."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
import numpy.typing as npt
from scipy.special import logsumexp

from .exceptions import DegenerateWeightsError, GridMismatchError, InvalidWeightError

if TYPE_CHECKING:
    from .models import Distribution

FloatArray = npt.NDArray[np.float64]


def normalize_log_weights(raw_log_weights: npt.ArrayLike) -> FloatArray:
    """Return ``raw - logsumexp(raw)``.

    ``-inf`` entries stay ``-inf`` (zero-probability atoms); NaN or ``+inf``
    is an invalid weight and an all ``-inf`` vector is degenerate.
    """
    raw = np.asarray(raw_log_weights, dtype=np.float64).reshape(-1)
    if raw.size == 0:
        raise DegenerateWeightsError(message="Leerer Gewichtsvektor.")
    if np.isnan(raw).any() or np.isposinf(raw).any():
        raise InvalidWeightError(details=[{"index": int(np.flatnonzero(~np.isfinite(raw) & ~np.isneginf(raw))[0])}])
    finite = np.isfinite(raw)
    if not finite.any():
        raise DegenerateWeightsError()

    # subtract the max first so huge common offsets cancel before exponentiation
    shifted = raw - raw[finite].max()
    return np.asarray(shifted - logsumexp(shifted), dtype=np.float64)


def total_variation(p: Distribution, q: Distribution) -> float:
    """0.5 * sum |p_i - q_i| on a shared grid."""
    if not p.grid.matches(q.grid):
        raise GridMismatchError(p.grid.size, q.grid.size)
    value = 0.5 * float(np.abs(p.weights - q.weights).sum())
    return min(value, 1.0)


def log_mean_exp(values: npt.ArrayLike) -> float:
    arr = np.asarray(values, dtype=np.float64).reshape(-1)
    return float(logsumexp(arr) - np.log(arr.size))
