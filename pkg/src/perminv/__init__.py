"""Exact invariant theory of finite permutation groups."""
from .certify import (
    Certificate,
    Conclusion,
    RuleContradiction,
    StructureReport,
    analyze,
    certify_non_cm_char2,
    gorenstein_status_char0,
)
from .molien import MolienResult, burnside_count, fixed_monomial_count, molien_series
from .orbits import (
    Monomial,
    MultiPoly,
    classify_an_orbit,
    gobel_generators,
    has_gap,
    orbit,
    orbit_count,
    orbit_sum,
    spans_degree,
)
from .perm import Permutation, PermGroup, generate_group, parse_permutation
from .series import GradedSeries, Poly, exact_divide, is_palindromic, series_coefficients

__version__ = "0.1.0"
