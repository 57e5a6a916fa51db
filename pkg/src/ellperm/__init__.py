"""ellperm: exact verification lab for alternating-permutation identities.

Enumerates weighted alternating permutations, builds the boustrophedon
triangle, computes secant-tangent numbers by independent routes, expands
Jacobi elliptic functions and continued-fraction convergents as exact
series, and reports a structured verdict for every registered claim.
"""

from .exact import (
    EgfSeries,
    Rat,
    WPoly,
    poly_arith,
    poly_eval,
    series_agreement_order,
    series_derive,
    series_mul,
    series_truncate,
    wpoly,
)
from .permutations import (
    ClassTag,
    Perm,
    StatVariant,
    class_weight_poly,
    classify,
    enumerate_class,
    standardize,
    stat,
)
from .bijection import Snake, SplitResult, merge, snake_encode, split_at_max
from .entringer import CandidateDef, Triangle, build_triangle, diagonal, row_sum
from .andre import AndreTable, a_bernoulli, a_integral, a_recurrence, ratio_sequence
from .jacobi import JacobiTaylor, Substitution, jacobi_taylor, specialize
from .cfrac import CfScheme, OgfSeries, builtin_schemes, cf_convergent_series
from .verdict import ClaimVerdict
from .verify import Caps, render_report, run_claims

__version__ = "0.1.0"

__all__ = [
    "AndreTable",
    "CandidateDef",
    "Caps",
    "CfScheme",
    "ClaimVerdict",
    "ClassTag",
    "EgfSeries",
    "JacobiTaylor",
    "OgfSeries",
    "Perm",
    "Rat",
    "Snake",
    "SplitResult",
    "StatVariant",
    "Substitution",
    "Triangle",
    "WPoly",
    "a_bernoulli",
    "a_integral",
    "a_recurrence",
    "build_triangle",
    "builtin_schemes",
    "cf_convergent_series",
    "class_weight_poly",
    "classify",
    "diagonal",
    "enumerate_class",
    "jacobi_taylor",
    "merge",
    "poly_arith",
    "poly_eval",
    "ratio_sequence",
    "render_report",
    "row_sum",
    "run_claims",
    "series_agreement_order",
    "series_derive",
    "series_mul",
    "series_truncate",
    "snake_encode",
    "specialize",
    "split_at_max",
    "standardize",
    "stat",
    "wpoly",
    "__version__",
]
