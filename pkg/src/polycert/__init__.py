"""Certification and verification of pointwise derivative bounds for
complex polynomials on the closed unit disk.

The central object is the coefficient ratio tail condition: when the real
part of every ratio tail stays at or above 1/2 on the disk, the polynomial
has no zeros there (apart from a possible origin zero) and satisfies
|z P'(z)| <= deg(P) |P(z)| pointwise.  The package certifies the condition
with Lipschitz lower bounds, locates roots, and stress-tests every related
inequality by deterministic seeded sampling.

All public functions are pure: they share no mutable state and may be
called concurrently.
"""

from .certify import (
    CERTIFIED,
    CERTIFIED_TIGHT,
    INCONCLUSIVE,
    REJECTED,
    Certificate,
    ConvexityVerdict,
    build_fejer_family,
    check_condition,
    check_convexity_corollary,
    enestrom_kakeya_bound,
)
from .errors import (
    ContourProximityError,
    NonConvergenceError,
    NotApplicableError,
    PoleError,
    PolynomialFormatError,
)
from .poly import (
    DividedDifferenceBound,
    RootSet,
    SparsePolynomial,
    divided_difference,
    divided_difference_expansion,
    divided_difference_factor,
    log_derivative,
    partial_fraction_real,
    partial_sum_remainders,
)
from .roots import (
    DiskCountReport,
    GovilChainReport,
    RootFindReport,
    count_roots_in_disk,
    find_roots,
    govil_chain_check,
)
from .trigmin import (
    MinResult,
    TrigTail,
    certified_min,
    from_ratio_tail,
    interior_spot_check,
)
from .verify import (
    VerificationReport,
    check_divided_difference_bound,
    default_abs_tol,
    disk_samples,
    divided_difference_sampling,
    half_plane_agreement,
    half_plane_equivalence,
    pointwise_grid,
    verify_aziz,
    verify_circle_bernstein,
    verify_combined_min,
    verify_pointwise_bernstein,
    verify_strict_interior,
    verify_tail_chain,
)

__version__ = "0.1.0"

__all__ = [
    "CERTIFIED",
    "CERTIFIED_TIGHT",
    "INCONCLUSIVE",
    "REJECTED",
    "Certificate",
    "ConvexityVerdict",
    "ContourProximityError",
    "DiskCountReport",
    "DividedDifferenceBound",
    "GovilChainReport",
    "MinResult",
    "NonConvergenceError",
    "NotApplicableError",
    "PoleError",
    "PolynomialFormatError",
    "RootFindReport",
    "RootSet",
    "SparsePolynomial",
    "TrigTail",
    "VerificationReport",
    "build_fejer_family",
    "certified_min",
    "check_condition",
    "check_convexity_corollary",
    "check_divided_difference_bound",
    "count_roots_in_disk",
    "default_abs_tol",
    "disk_samples",
    "divided_difference",
    "divided_difference_expansion",
    "divided_difference_factor",
    "divided_difference_sampling",
    "enestrom_kakeya_bound",
    "find_roots",
    "from_ratio_tail",
    "govil_chain_check",
    "half_plane_agreement",
    "half_plane_equivalence",
    "interior_spot_check",
    "log_derivative",
    "partial_fraction_real",
    "partial_sum_remainders",
    "pointwise_grid",
    "verify_aziz",
    "verify_circle_bernstein",
    "verify_combined_min",
    "verify_pointwise_bernstein",
    "verify_strict_interior",
    "verify_tail_chain",
]
