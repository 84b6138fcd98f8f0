"""Twisted Gabidulin rank-metric codes over F_{q^n}."""

from .exceptions import NotMRDError, RankError, SizeError
from .gabidulin import GabidulinCode
from .gf import ExtensionField, FieldElement
from .linpoly import LinearizedPoly, annihilator, moore_determinant, moore_matrix
from .oracle import OracleBudget, oracle_min_distance, oracle_nearest, oracle_singleton_check
from .rank_metric import rank_distance, rank_norm, random_error
from .twisted import TwistedCode, load_code, solve_quadratic

__version__ = "0.1.0"

__all__ = [
    "ExtensionField",
    "FieldElement",
    "GabidulinCode",
    "LinearizedPoly",
    "NotMRDError",
    "OracleBudget",
    "RankError",
    "SizeError",
    "TwistedCode",
    "annihilator",
    "load_code",
    "moore_determinant",
    "moore_matrix",
    "oracle_min_distance",
    "oracle_nearest",
    "oracle_singleton_check",
    "random_error",
    "rank_distance",
    "rank_norm",
    "solve_quadratic",
]
