from __future__ import annotations

import numpy as np

from app.core.core_numerics import (
    AtomLosses,
    Distribution,
    GridMismatchError,
    LossMatrix,
    NonFiniteLossError,
    Temperature,
)

from .models import GibbsResult
from .update import gibbs_update


def prequential_posteriors(prior: Distribution, matrix: LossMatrix, eta: Temperature | float) -> list[GibbsResult]:
    """Posteriors q_1..q_n where q_t conditions on data 1..t−1 (q_1 is the prior update on zero loss)."""
    temperature = Temperature.coerce(eta)
    if matrix.n_atoms != prior.grid.size:
        raise GridMismatchError(prior.grid.size, matrix.n_atoms)

    # running sums in ascending data order
    cumulative = np.zeros((matrix.n_atoms, matrix.n_data + 1))
    cumulative[:, 1:] = np.cumsum(matrix.values, axis=1)
    offsets = np.concatenate([[0.0], np.cumsum(matrix.column_offsets)])

    results: list[GibbsResult] = []
    for t in range(matrix.n_data):
        losses = AtomLosses(values=cumulative[:, t], offset=float(offsets[t]))
        try:
            results.append(gibbs_update(prior, losses, temperature))
        except NonFiniteLossError as exc:
            raise NonFiniteLossError(exc.atom_index, exc.label, step=t + 1) from exc
    return results
