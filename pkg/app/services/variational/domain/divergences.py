"""f-divergence catalog D(q‖π) = Σ π_i φ(q_i/π_i).

Boundary convention: atoms with π_i = 0 contribute 0 when q_i = 0 and make the
divergence +∞ otherwise; atoms with q_i = 0 < π_i contribute π_i φ(0⁺).
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt
from scipy.special import xlogy

from app.core.core_numerics import Distribution, FloatArray, GridMismatchError

from .exceptions import InvalidDivergenceError

Phi = Callable[[FloatArray], FloatArray]

_PHI_ONE_TOL = 1e-15
_CONVEXITY_GRID = np.geomspace(1e-3, 1e3, 241)


@dataclass(frozen=True, eq=False)
class DivergenceSpec:
    name: str
    phi: Phi
    dphi: Phi
    params: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        at_one = float(np.asarray(self.phi(np.array([1.0])))[0])
        if not abs(at_one) <= _PHI_ONE_TOL:
            raise InvalidDivergenceError(self.name, f"φ(1) = {at_one!r} ≠ 0")
        t = _CONVEXITY_GRID
        values = np.asarray(self.phi(t), dtype=np.float64)
        # chords above the graph on consecutive triples
        left, mid, right = t[:-2], t[1:-1], t[2:]
        weight = (right - mid) / (right - left)
        chord = weight * values[:-2] + (1.0 - weight) * values[2:]
        slack = 1e-9 * np.maximum(1.0, np.abs(values[1:-1]))
        if not np.isfinite(values).all() or (chord < values[1:-1] - slack).any():
            raise InvalidDivergenceError(self.name, "φ ist auf dem Prüfgitter nicht konvex")

    def terms(self, q: npt.ArrayLike, baseline: npt.ArrayLike) -> FloatArray:
        """Per-atom contributions π_i φ(q_i/π_i) along the last axis."""
        q_arr = np.asarray(q, dtype=np.float64)
        p = np.asarray(baseline, dtype=np.float64)
        positive = p > 0
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(positive, q_arr / np.where(positive, p, 1.0), 0.0)
            inside = p * np.asarray(self.phi(ratio), dtype=np.float64)
        outside = np.where(q_arr > 0, np.inf, 0.0)
        return np.where(positive, inside, outside)

    def value(self, q: npt.ArrayLike, baseline: npt.ArrayLike) -> FloatArray | float:
        summed = self.terms(q, baseline).sum(axis=-1)
        return float(summed) if np.ndim(summed) == 0 else summed


def _kl_phi(t: FloatArray) -> FloatArray:
    return xlogy(t, t)


def _kl_dphi(t: FloatArray) -> FloatArray:
    return np.log(t) + 1.0


def _reverse_kl_phi(t: FloatArray) -> FloatArray:
    with np.errstate(divide="ignore"):
        return -np.log(t)


def _reverse_kl_dphi(t: FloatArray) -> FloatArray:
    return -1.0 / t


def _chi_squared_phi(t: FloatArray) -> FloatArray:
    return (t - 1.0) ** 2


def _chi_squared_dphi(t: FloatArray) -> FloatArray:
    return 2.0 * (t - 1.0)


def _hellinger_phi(t: FloatArray) -> FloatArray:
    return (np.sqrt(t) - 1.0) ** 2


def _hellinger_dphi(t: FloatArray) -> FloatArray:
    return 1.0 - 1.0 / np.sqrt(t)


KL = DivergenceSpec(name="KL", phi=_kl_phi, dphi=_kl_dphi)
REVERSE_KL = DivergenceSpec(name="reverse-KL", phi=_reverse_kl_phi, dphi=_reverse_kl_dphi)
CHI_SQUARED = DivergenceSpec(name="chi-squared", phi=_chi_squared_phi, dphi=_chi_squared_dphi)
SQUARED_HELLINGER = DivergenceSpec(name="squared-Hellinger", phi=_hellinger_phi, dphi=_hellinger_dphi)


def kl_family(c: float = 1.0, a: float = 0.0) -> DivergenceSpec:
    """φ(t) = c·t log t + a(t − 1); equals c·KL on the simplex."""
    if not c > 0:
        raise InvalidDivergenceError("kl-family", f"c = {c!r} muss positiv sein")

    def phi(t: FloatArray) -> FloatArray:
        return c * xlogy(t, t) + a * (t - 1.0)

    def dphi(t: FloatArray) -> FloatArray:
        return c * (np.log(t) + 1.0) + a

    return DivergenceSpec(name="kl-family", phi=phi, dphi=dphi, params={"c": c, "a": a})


_CATALOG: dict[str, DivergenceSpec] = {spec.name: spec for spec in (KL, REVERSE_KL, CHI_SQUARED, SQUARED_HELLINGER)}


def get_divergence(name: str, *, c: float = 1.0, a: float = 0.0) -> DivergenceSpec:
    if name == "kl-family":
        return kl_family(c, a)
    try:
        return _CATALOG[name]
    except KeyError:
        raise InvalidDivergenceError(name, "unbekannte Divergenz") from None


def divergence(div: DivergenceSpec, q: Distribution, baseline: Distribution) -> float:
    if not q.grid.matches(baseline.grid):
        raise GridMismatchError(baseline.grid.size, q.grid.size)
    return float(div.value(q.weights, baseline.weights))
