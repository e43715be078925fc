"""Certification of the coefficient tail condition and related shortcuts.

A polynomial is certified when, for every anchor index nu, the real part of
its coefficient ratio tail stays at or above 1/2 on the closed unit disk.
Certification implies zero-freeness of the closed disk (minus the origin
when the lowest exponent is positive) and the pointwise derivative bound
|z P'(z)| <= deg(P) |P(z)| there.

The convexity shortcut covers dense polynomials with positive, decreasing,
convex coefficients: Fejer's theorem makes every ratio tail a nonnegative
kernel plus 1/2, so the condition holds without running the minimizer.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotApplicableError
from .poly import SparsePolynomial
from .trigmin import MinResult, certified_min, from_ratio_tail

CERTIFIED = "Certified"
CERTIFIED_TIGHT = "CertifiedTight"
REJECTED = "Rejected"
INCONCLUSIVE = "Inconclusive"

DEFAULT_TOL = 1e-9
THRESHOLD = 0.5


@dataclass(frozen=True)
class Certificate:
    """Per-anchor minimization results plus the overall verdict.

    margin = min_nu lower_bound - 1/2.  Certified needs margin >= tol;
    CertifiedTight flags |margin| < tol (the boundary case where the true
    minimum sits at 1/2); Rejected needs a witness value below 1/2 - tol;
    everything else is Inconclusive.
    """

    per_nu: tuple[tuple[int, MinResult], ...]
    margin: float
    verdict: str
    tolerance_used: float
    inconclusive_nus: tuple[int, ...] = ()

    def to_json_dict(self) -> dict:
        payload = {
            "verdict": self.verdict,
            "margin": self.margin,
            "tolerance": self.tolerance_used,
            "per_nu": [
                {
                    "nu": nu,
                    "lower_bound": res.lower_bound,
                    "witness_x": res.witness_x,
                    "witness_value": res.witness_value,
                }
                for nu, res in self.per_nu
            ],
        }
        if self.inconclusive_nus:
            payload["inconclusive_nus"] = list(self.inconclusive_nus)
        return payload

    def is_certified(self) -> bool:
        return self.verdict in (CERTIFIED, CERTIFIED_TIGHT)


@dataclass(frozen=True)
class ConvexityVerdict:
    """Outcome of the convex-coefficient shortcut.

    second_differences holds the end-modified values: the ordinary second
    difference up to index n-2, then a_{n-1} - 2 a_n, then a_n.
    """

    passes: bool
    failing_index: int | None
    second_differences: tuple[float, ...] = field(default=())


def check_condition(P: SparsePolynomial, tol: float = DEFAULT_TOL) -> Certificate:
    """Certify the ratio tail condition for every anchor index.

    Deterministic for a fixed tolerance; subproblems are independent and
    assembled in anchor order.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if P.is_zero():
        raise ValueError("cannot certify the zero polynomial")
    n = P.term_count() - 1
    per_nu = tuple((nu, certified_min(from_ratio_tail(P, nu), tol)) for nu in range(n + 1))

    margin = min(res.lower_bound for _, res in per_nu) - THRESHOLD
    inconclusive = tuple(nu for nu, res in per_nu if not res.converged)

    if inconclusive:
        verdict = INCONCLUSIVE
    elif any(res.witness_value < THRESHOLD - tol for _, res in per_nu):
        verdict = REJECTED
    elif margin >= tol:
        verdict = CERTIFIED
    elif abs(margin) < tol:
        verdict = CERTIFIED_TIGHT
    else:
        verdict = INCONCLUSIVE

    return Certificate(per_nu, margin, verdict, tol, inconclusive)


def check_convexity_corollary(P: SparsePolynomial) -> ConvexityVerdict:
    """Convex-coefficient shortcut for dense, real, positive coefficients.

    Requires exponents 0..n with no gaps and strictly positive real
    coefficients; anything else raises :class:`NotApplicableError` (the
    question is structural, not a failed check).  A pass guarantees the
    ratio tail condition holds, so :func:`check_condition` on the same
    polynomial must not reject.
    """
    if P.is_zero():
        raise NotApplicableError("the zero polynomial has no coefficient sequence")
    exps = P.exponents
    if exps != tuple(range(len(exps))):
        raise NotApplicableError(
            "the convexity shortcut needs dense exponents 0..n; "
            f"got gaps in {exps}"
        )
    if len(exps) < 2:
        raise NotApplicableError("the convexity shortcut needs degree >= 1")
    coeffs = []
    for k, a in P.terms:
        if a.imag != 0:
            raise NotApplicableError(f"coefficient at exponent {k} is not real")
        if a.real <= 0:
            raise NotApplicableError(f"coefficient at exponent {k} is not positive")
        coeffs.append(a.real)

    n = len(coeffs) - 1
    second = []
    for nu in range(n + 1):
        if nu <= n - 2:
            second.append(coeffs[nu + 2] - 2 * coeffs[nu + 1] + coeffs[nu])
        elif nu == n - 1:
            second.append(coeffs[n - 1] - 2 * coeffs[n])
        else:
            second.append(coeffs[n])

    failing = None
    for nu in range(n + 1):
        if nu < n and coeffs[nu] < coeffs[nu + 1]:
            failing = nu
            break
        if second[nu] < 0:
            failing = nu
            break
    return ConvexityVerdict(failing is None, failing, tuple(second))


def build_fejer_family(n: int) -> SparsePolynomial:
    """The family sum_{k=0}^{n} (n+1-k) z^k, defined for n >= 2.

    Every ratio tail of these polynomials equals 1/2 plus a Fejer kernel,
    so the tail condition holds with the minimum attained exactly at 1/2.
    """
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise ValueError(f"the family is defined for integers n >= 2, got {n!r}")
    n = int(n)
    return SparsePolynomial(tuple((k, complex(n + 1 - k)) for k in range(n + 1)))


def enestrom_kakeya_bound(P: SparsePolynomial) -> float:
    """Upper root-modulus bound max_k a_k / a_{k+1} for positive coefficients.

    Applies to dense polynomials with real positive coefficients; every zero
    then satisfies |z| <= returned bound.  For the kernel family above the
    bound is exactly 2.
    """
    if P.is_zero():
        raise NotApplicableError("the zero polynomial has no roots to bound")
    exps = P.exponents
    if exps != tuple(range(len(exps))):
        raise NotApplicableError("the coefficient ratio bound needs dense exponents 0..n")
    if len(exps) < 2:
        raise NotApplicableError("the coefficient ratio bound needs degree >= 1")
    coeffs = []
    for k, a in P.terms:
        if a.imag != 0 or a.real <= 0:
            raise NotApplicableError(f"coefficient at exponent {k} must be real and positive")
        coeffs.append(a.real)
    return max(coeffs[k] / coeffs[k + 1] for k in range(len(coeffs) - 1))
