"""The generalized-Bayes update q ∝ π·exp(−ηL) and its invariance helpers."""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt
from scipy.special import logsumexp

from app.core.core_numerics import (
    AtomLosses,
    DegenerateWeightsError,
    Distribution,
    FloatArray,
    GridMismatchError,
    InvalidScaleError,
    NonFiniteLossError,
    Temperature,
)

from .models import GibbsResult

logger = logging.getLogger("app_logger")

LossInput = AtomLosses | npt.ArrayLike


def _active_atoms(prior: Distribution, losses: AtomLosses, allow_infinite: bool) -> npt.NDArray[np.bool_]:
    if losses.size != prior.grid.size:
        raise GridMismatchError(prior.grid.size, losses.size)
    support = prior.support
    values = losses.values
    bad = support & ~np.isfinite(values)
    if allow_infinite:
        bad &= ~np.isposinf(values)
    if bad.any():
        atom = int(np.flatnonzero(bad)[0])
        raise NonFiniteLossError(atom, prior.grid.label(atom), value=float(values[atom]))
    active = support & np.isfinite(values)
    if not active.any():
        raise DegenerateWeightsError(message="Kein Atom mit positivem Priorgewicht hat einen endlichen Verlust.")
    return active


def _tilted(prior: Distribution, values: FloatArray, eta: float, active: npt.NDArray[np.bool_]) -> FloatArray:
    tilted = np.full(values.size, -np.inf)
    tilted[active] = prior.log_weights[active] - eta * values[active]
    return tilted


def gibbs_update(
    prior: Distribution,
    losses: LossInput,
    eta: Temperature | float,
    *,
    allow_infinite: bool = False,
) -> GibbsResult:
    """Tilt *prior* by exp(−η·L).

    Atoms outside the prior's support keep zero weight whatever their loss.
    With ``allow_infinite`` a ``+inf`` loss removes the atom instead of
    failing; NaN and ``-inf`` always fail.
    """
    temperature = Temperature.coerce(eta)
    atom_losses = AtomLosses.coerce(losses)
    active = _active_atoms(prior, atom_losses, allow_infinite)
    values = atom_losses.values

    # tilt relative to the smallest active loss so the dominant atoms stay near 0
    min_value = float(values[active].min())
    # anchoring uses min_i L_i over every atom with a finite loss
    anchor = float(values[np.isfinite(values)].min())
    tilted = _tilted(prior, values - min_value, temperature.eta, active)
    anchored = float(logsumexp(tilted))
    posterior = Distribution(grid=prior.grid, log_weights=tilted - anchored)
    excluded = tuple(int(i) for i in np.flatnonzero(prior.support & ~active))
    if excluded:
        logger.debug("Gibbs update excluded %d atoms with infinite loss", len(excluded))

    return GibbsResult(
        posterior=posterior,
        log_normalizer=anchored - temperature.eta * min_value - temperature.eta * atom_losses.offset,
        anchored_log_normalizer=min(anchored - temperature.eta * (min_value - anchor), 0.0),
        eta=temperature,
        min_loss=anchor + atom_losses.offset,
        excluded_atoms=excluded,
    )


def sequential_update(
    prior: Distribution,
    loss_blocks: Sequence[LossInput],
    eta: Temperature | float,
) -> GibbsResult:
    """Fold :func:`gibbs_update` over *loss_blocks*; log Z is the sum of stage values."""
    temperature = Temperature.coerce(eta)
    blocks = [AtomLosses.coerce(block) for block in loss_blocks]
    if not blocks:
        return GibbsResult(
            posterior=prior,
            log_normalizer=0.0,
            anchored_log_normalizer=0.0,
            eta=temperature,
            min_loss=0.0,
        )

    current = prior
    stage_log_z: list[float] = []
    for block in blocks:
        stage = gibbs_update(current, block, temperature)
        current = stage.posterior
        stage_log_z.append(stage.log_normalizer)

    total = blocks[0]
    for block in blocks[1:]:
        total = total + block
    one_shot = gibbs_update(prior, total, temperature)

    return GibbsResult(
        posterior=current,
        log_normalizer=math.fsum(stage_log_z),
        anchored_log_normalizer=one_shot.anchored_log_normalizer,
        eta=temperature,
        min_loss=one_shot.min_loss,
    )


def apply_data_shift(losses: LossInput, c: float) -> AtomLosses:
    """Add the data-only constant *c* to every atom's loss."""
    if not math.isfinite(c):
        raise NonFiniteLossError(None, value=c)
    return AtomLosses.coerce(losses).shifted(float(c))


def apply_loss_scaling(losses: LossInput, eta: Temperature | float, a: float) -> tuple[AtomLosses, Temperature]:
    """(a·L, η/a): the same update written in different loss units."""
    if not math.isfinite(a) or a <= 0.0:
        raise InvalidScaleError(a)
    temperature = Temperature.coerce(eta)
    return AtomLosses.coerce(losses).scaled(a), Temperature(temperature.eta / a)
