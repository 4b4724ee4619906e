"""Normalizing-constant bookkeeping: evidence records, Bayes factors, anchoring.

log Z depends on data-only loss shifts and on the loss scale while the
posterior does not, so every record keeps η and the shift it was computed
with, and every output carries :data:`WARNING_BANNER`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy.typing as npt

from app.core.core_gibbs import GibbsResult, apply_data_shift, gibbs_update
from app.core.core_numerics import AtomLosses, Distribution, Temperature, total_variation

from .exceptions import InvalidEvidenceError, TemperatureMismatchError

WARNING_BANNER = (
    "WARNING: Gibbs normalizers and generalized Bayes factors are not canonical evidence; "
    "data-only loss shifts and loss rescaling change them without changing any posterior."
)
ANCHORED_NOTE = (
    "anchored evidence measures the curvature/complexity of the anchored objective around its minimum, not evidence"
)

LossInput = AtomLosses | npt.ArrayLike


@dataclass(frozen=True, slots=True)
class EvidenceRecord:
    """``shift_applied`` is the total data-only shift inside the losses the record was computed from."""

    model_id: str
    log_Z: float
    anchored_log_Z: float
    eta: Temperature
    shift_applied: float = 0.0
    warning: str = WARNING_BANNER

    def __post_init__(self) -> None:
        if self.anchored_log_Z > 0.0:
            raise InvalidEvidenceError(self.anchored_log_Z)

    def to_document(self) -> dict[str, object]:
        return {
            "model_id": self.model_id,
            "eta": self.eta.eta,
            "log_Z": self.log_Z,
            "anchored_log_Z": self.anchored_log_Z,
            "shift_applied": self.shift_applied,
            "warning": self.warning,
        }


def record_from_result(model_id: str, result: GibbsResult, shift_applied: float = 0.0) -> EvidenceRecord:
    return EvidenceRecord(
        model_id=model_id,
        log_Z=result.log_normalizer,
        anchored_log_Z=result.anchored_log_normalizer,
        eta=result.eta,
        shift_applied=shift_applied,
    )


def _update(
    prior: Distribution, losses: LossInput, eta: Temperature | float, c: float, allow_infinite: bool
) -> GibbsResult:
    shifted = apply_data_shift(losses, c) if c != 0.0 else AtomLosses.coerce(losses)
    return gibbs_update(prior, shifted, eta, allow_infinite=allow_infinite)


def evidence_record(
    model_id: str,
    prior: Distribution,
    losses: LossInput,
    eta: Temperature | float,
    *,
    shift: float = 0.0,
    allow_infinite: bool = False,
) -> EvidenceRecord:
    base = AtomLosses.coerce(losses)
    return record_from_result(model_id, _update(prior, base, eta, shift, allow_infinite), base.offset + shift)


@dataclass(frozen=True, slots=True)
class ShiftedPair:
    base: EvidenceRecord
    shifted: EvidenceRecord
    tv: float
    delta_log_Z: float
    expected_delta_log_Z: float


def shifted_pair_report(
    prior: Distribution,
    losses: LossInput,
    eta: Temperature | float,
    c: float,
    *,
    model_id: str = "model",
    allow_infinite: bool = False,
) -> ShiftedPair:
    """Update on L and on L + c: same posterior, log Z moved by −η·c."""
    temperature = Temperature.coerce(eta)
    atom_losses = AtomLosses.coerce(losses)
    base = _update(prior, atom_losses, temperature, 0.0, allow_infinite)
    shifted = _update(prior, atom_losses, temperature, c, allow_infinite)
    return ShiftedPair(
        base=record_from_result(model_id, base, atom_losses.offset),
        shifted=record_from_result(model_id, shifted, atom_losses.offset + c),
        tv=total_variation(base.posterior, shifted.posterior),
        delta_log_Z=shifted.log_normalizer - base.log_normalizer,
        expected_delta_log_Z=-temperature.eta * c,
    )


def _require_same_eta(m1: EvidenceRecord, m0: EvidenceRecord) -> None:
    if not math.isclose(m1.eta.eta, m0.eta.eta, rel_tol=1e-12):
        raise TemperatureMismatchError(m1.eta.eta, m0.eta.eta)


def generalized_bayes_factor(m1: EvidenceRecord, m0: EvidenceRecord) -> float:
    """log BF₁₀ = log Z₁ − log Z₀; only defined at a common η."""
    _require_same_eta(m1, m0)
    return m1.log_Z - m0.log_Z


def anchored_evidence(prior: Distribution, losses: LossInput, eta: Temperature | float) -> float:
    """−(1/η)·log Z̃ for losses anchored at their minimum; invariant under data-only shifts."""
    temperature = Temperature.coerce(eta)
    return -gibbs_update(prior, losses, temperature).anchored_log_normalizer / temperature.eta


@dataclass(frozen=True, slots=True)
class AnchoredBayesFactor:
    log_ratio: float
    evidence_1: float
    evidence_0: float
    note: str = ANCHORED_NOTE
    warning: str = WARNING_BANNER

    @property
    def evidence_difference(self) -> float:
        return self.evidence_1 - self.evidence_0


def anchored_bayes_factor(m1: EvidenceRecord, m0: EvidenceRecord) -> AnchoredBayesFactor:
    _require_same_eta(m1, m0)
    eta = m1.eta.eta
    return AnchoredBayesFactor(
        log_ratio=m1.anchored_log_Z - m0.anchored_log_Z,
        evidence_1=-m1.anchored_log_Z / eta,
        evidence_0=-m0.anchored_log_Z / eta,
    )


@dataclass(frozen=True, slots=True)
class BayesFactorShiftDemo:
    before: tuple[EvidenceRecord, EvidenceRecord]
    after: tuple[EvidenceRecord, EvidenceRecord]
    log_bf_before: float
    log_bf_after: float
    predicted_change: float
    tv_model_1: float
    tv_model_0: float

    @property
    def change(self) -> float:
        return self.log_bf_after - self.log_bf_before


def bayes_factor_shift_demo(
    model_1: tuple[str, Distribution, LossInput],
    model_0: tuple[str, Distribution, LossInput],
    eta: Temperature | float,
    c1: float,
    c0: float,
    *,
    allow_infinite: bool = False,
) -> BayesFactorShiftDemo:
    """Shift each model's loss by its own data-only constant and compare log BF₁₀.

    Both posteriors stay put; log BF₁₀ moves by η(c₀ − c₁).
    """
    temperature = Temperature.coerce(eta)
    pair_1 = shifted_pair_report(model_1[1], model_1[2], temperature, c1, model_id=model_1[0], allow_infinite=allow_infinite)
    pair_0 = shifted_pair_report(model_0[1], model_0[2], temperature, c0, model_id=model_0[0], allow_infinite=allow_infinite)
    return BayesFactorShiftDemo(
        before=(pair_1.base, pair_0.base),
        after=(pair_1.shifted, pair_0.shifted),
        log_bf_before=generalized_bayes_factor(pair_1.base, pair_0.base),
        log_bf_after=generalized_bayes_factor(pair_1.shifted, pair_0.shifted),
        predicted_change=temperature.eta * (c0 - c1),
        tv_model_1=pair_1.tv,
        tv_model_0=pair_0.tv,
    )
