from .exceptions import AllAtomsInfeasibleError, ElInfeasibleError, EtInfeasibleError
from .moments import MomentModel, MomentOracle, build_moment_model, mean_moments, mean_variance_moments
from .quasi import (
    AtomSolutions,
    ConventionComparison,
    convention_offset_check,
    el_quasi_posterior,
    quasi_posterior,
    solve_atoms,
)
from .weights import (
    CONSTRAINT_TOL,
    Criterion,
    WeightSolution,
    brute_force_weights,
    el_weights,
    et_weights,
    hull_interior_margin,
    zero_in_interior,
)

__all__ = [
    "CONSTRAINT_TOL",
    "AllAtomsInfeasibleError",
    "AtomSolutions",
    "ConventionComparison",
    "Criterion",
    "ElInfeasibleError",
    "EtInfeasibleError",
    "MomentModel",
    "MomentOracle",
    "WeightSolution",
    "brute_force_weights",
    "build_moment_model",
    "convention_offset_check",
    "el_quasi_posterior",
    "el_weights",
    "et_weights",
    "hull_interior_margin",
    "mean_moments",
    "mean_variance_moments",
    "quasi_posterior",
    "solve_atoms",
    "zero_in_interior",
]
