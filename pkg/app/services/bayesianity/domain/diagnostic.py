"""x-normalization diagnostic: is A(θ) = ∫ exp{−η ℓ(θ, x)} μ(dx) free of θ?

Declared data-only shifts c(x) of the loss are kept out of the θ-dependence
test (they fold into the base measure) but are included in the reported
``log_A_values``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from scipy.special import logsumexp

from app.core.core_numerics import BoolArray, Dataset, FloatArray, LossModel, ParamGrid, SampleGrid, Temperature

from ..config import DiagnosticSettings, get_diagnostic_settings
from .exceptions import PartitionOverflowError

CAVEAT = (
    "A belief-posterior verdict only covers the supplied sample grid; "
    "a decision-posterior verdict is definitive."
)


class Verdict(StrEnum):
    BELIEF = "belief-posterior"
    DECISION = "decision-posterior"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True, eq=False, slots=True)
class DiagnosticReport:
    log_A_values: FloatArray
    log_A_unshifted: FloatArray
    max_rel_variation: float
    verdict: Verdict
    quadrature_error_estimate: float
    rel_tol: float
    error_margin: float
    eta: float
    caveat: str = CAVEAT

    @property
    def A_values(self) -> FloatArray:
        return np.exp(self.log_A_values)


def _log_partition(values: FloatArray, eta: float, xs: SampleGrid) -> FloatArray:
    return np.asarray(logsumexp(xs.log_weights[None, :] - eta * values, axis=1), dtype=np.float64)


def log_partition(
    loss: LossModel,
    eta: Temperature | float,
    params: ParamGrid,
    xs: SampleGrid,
    *,
    support: BoolArray | None = None,
) -> FloatArray:
    """log A(θ) per atom, without declared data-only shifts; non-finite losses off *support* count as +inf."""
    matrix = loss.evaluate(params, _sample_dataset(xs), support=support)
    return _log_partition(matrix.values, Temperature.coerce(eta).eta, xs)


def _relative_spread(log_values: FloatArray) -> float:
    return float(np.expm1(log_values.max() - log_values.min()))


def _verdict(variation: float, error: float, rel_tol: float, margin: float) -> Verdict:
    if variation <= rel_tol and error * margin <= rel_tol:
        return Verdict.BELIEF
    if variation > rel_tol and error * margin <= variation:
        return Verdict.DECISION
    return Verdict.INCONCLUSIVE


def _sample_dataset(xs: SampleGrid) -> Dataset:
    return Dataset(records=xs.nodes)


def partition_function_curve(
    loss: LossModel,
    eta: Temperature | float,
    params: ParamGrid,
    xs: SampleGrid,
    *,
    settings: DiagnosticSettings | None = None,
) -> DiagnosticReport:
    cfg = settings or get_diagnostic_settings()
    temperature = Temperature.coerce(eta)
    matrix = loss.evaluate(params, _sample_dataset(xs))
    log_a_base = _log_partition(matrix.values, temperature.eta, xs)
    log_a_full = _log_partition(matrix.total, temperature.eta, xs)
    for log_a in (log_a_base, log_a_full):
        with np.errstate(over="ignore", under="ignore"):
            a_values = np.exp(log_a)
        bad = np.flatnonzero(~np.isfinite(a_values) | (a_values <= 0.0))
        if bad.size:
            index = int(bad[0])
            raise PartitionOverflowError(index, params.label(index), float(log_a[index]))

    variation = _relative_spread(log_a_base)
    error = 0.0
    coarse = xs.half_resolution()
    if coarse is not None:
        coarse_matrix = loss.evaluate(params, _sample_dataset(coarse))
        log_a_coarse = _log_partition(coarse_matrix.values, temperature.eta, coarse)
        # Richardson: trapezoid error at step h is about (I_h − I_2h) / 3
        error = float(np.abs(np.expm1(log_a_base - log_a_coarse)).max()) / 3.0

    return DiagnosticReport(
        log_A_values=log_a_full,
        log_A_unshifted=log_a_base,
        max_rel_variation=variation,
        verdict=_verdict(variation, error, cfg.DIAGNOSTIC_REL_TOL, cfg.DIAGNOSTIC_ERROR_MARGIN),
        quadrature_error_estimate=error,
        rel_tol=cfg.DIAGNOSTIC_REL_TOL,
        error_margin=cfg.DIAGNOSTIC_ERROR_MARGIN,
        eta=temperature.eta,
    )
