from .additivity import product_additivity_gap
from .divergences import (
    CHI_SQUARED,
    KL,
    REVERSE_KL,
    SQUARED_HELLINGER,
    DivergenceSpec,
    divergence,
    get_divergence,
    kl_family,
)
from .exceptions import InvalidDivergenceError
from .solver import SolveReport, brute_force_two_atom, objective, solve_penalized
from .vnm import (
    CONCENTRATION_TOL,
    UtilityReport,
    is_vnm_rationalizable,
    maximize_linear_utility,
    vnm_optimal_rule,
)

__all__ = [
    "CHI_SQUARED",
    "CONCENTRATION_TOL",
    "KL",
    "REVERSE_KL",
    "SQUARED_HELLINGER",
    "DivergenceSpec",
    "InvalidDivergenceError",
    "SolveReport",
    "UtilityReport",
    "brute_force_two_atom",
    "divergence",
    "get_divergence",
    "is_vnm_rationalizable",
    "kl_family",
    "maximize_linear_utility",
    "objective",
    "product_additivity_gap",
    "solve_penalized",
    "vnm_optimal_rule",
]
