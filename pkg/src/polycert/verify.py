"""Seeded sampling checks for the derivative inequalities on the unit disk.

Every check draws the same kind of sample set: points uniform over the disk
by area, a fixed circle grid (equality cases live on the boundary), and the
landmark points {0, 1, -1, i, -i, -1/2}.  Reports carry the worst ratio of
the two sides, the witness where it occurred, and explicit violations; the
absolute tolerance scales with the coefficient mass since all inequalities
are scale-covariant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .certify import Certificate, check_condition
from .errors import NotApplicableError
from .poly import (
    DividedDifferenceBound,
    SparsePolynomial,
    divided_difference,
    divided_difference_factor,
    partial_sum_remainders,
)
from .roots import find_roots

LANDMARKS = (0j, 1 + 0j, -1 + 0j, 1j, -1j, -0.5 + 0j)
CIRCLE_GRID = 1024
INTERIOR_MARGIN = 1e-6
VIOLATION_CAP = 50
AGREEMENT_BAND = 1e-12
BOUND_SLACK = 1e-10


def default_abs_tol(P: SparsePolynomial) -> float:
    """Tolerance 1e-10 * (1 + sum |a_nu|): scales with the inequality sides."""
    return 1e-10 * (1.0 + P.coefficient_mass())


def _gate_moduli(P: SparsePolynomial, coarse: float = 2e-2) -> list[float]:
    """Root moduli for precondition gates, robust to multiple-root blur.

    A multiplicity-r root is located only to about eps^(1/r), so the finder
    may report it as a ring of nearby simple roots whose minimum modulus
    undershoots the true one.  Re-clustering coarsely and taking
    multiplicity-weighted centroids collapses such rings back to their
    center without moving genuinely separated roots.
    """
    located = find_roots(P)
    clusters: list[list[tuple[complex, int]]] = []
    for loc, mult in located.roots.roots:
        for cluster in clusters:
            total = sum(m for _, m in cluster)
            center = sum(c * m for c, m in cluster) / total
            if abs(loc - center) <= coarse:
                cluster.append((loc, mult))
                break
        else:
            clusters.append([(loc, mult)])
    moduli = []
    for cluster in clusters:
        total = sum(m for _, m in cluster)
        center = sum(c * m for c, m in cluster) / total
        moduli.append(abs(center))
    return moduli


def disk_samples(samples: int, seed: int) -> np.ndarray:
    """Landmarks, a fixed circle grid, then area-uniform points in the disk."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    radius = np.sqrt(rng.random(samples))
    angle = 2.0 * np.pi * rng.random(samples)
    interior = radius * np.exp(1j * angle)
    circle = np.exp(1j * 2.0 * np.pi * np.arange(CIRCLE_GRID) / CIRCLE_GRID)
    return np.concatenate([np.asarray(LANDMARKS), circle, interior])


@dataclass
class VerificationReport:
    """Worst-case ratio, witness, and violations of one sampled inequality.

    ``violations`` is capped at a fixed length for report size;
    ``violation_count`` always carries the full tally, and the check passed
    exactly when that tally is zero.
    """

    check_name: str
    samples: int
    worst_ratio: float
    worst_witness: complex
    violations: tuple[tuple[complex, float, float], ...]
    violation_count: int
    passed: bool
    extras: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        payload = {
            "check": self.check_name,
            "samples": self.samples,
            "worst_ratio": self.worst_ratio,
            "worst_witness": [self.worst_witness.real, self.worst_witness.imag],
            "violations": [
                [z.real, z.imag, lhs, rhs] for z, lhs, rhs in self.violations
            ],
            "passed": self.passed,
            "violation_count": self.violation_count,
        }
        payload.update(self.extras)
        return payload


def _ratio_report(
    name: str,
    zs: np.ndarray,
    lhs: np.ndarray,
    rhs: np.ndarray,
    abs_tol: float,
) -> VerificationReport:
    positive = rhs > 0.0
    ratios = np.zeros(len(zs))
    np.divide(lhs, rhs, out=ratios, where=positive)
    if positive.any():
        i = int(np.argmax(ratios))
        worst_ratio = float(ratios[i])
        worst_witness = complex(zs[i])
    else:
        worst_ratio = 0.0
        worst_witness = 0j
    bad = lhs > rhs + abs_tol
    idx = np.flatnonzero(bad)
    listed = tuple(
        (complex(zs[i]), float(lhs[i]), float(rhs[i])) for i in idx[:VIOLATION_CAP]
    )
    return VerificationReport(
        name, len(zs), worst_ratio, worst_witness, listed, int(bad.sum()), not bad.any()
    )


def pointwise_grid(P: SparsePolynomial, samples: int = 100_000, seed: int = 42):
    """Sample grid for the pointwise derivative bound: (z, |zP'|, deg|P|, ratio).

    This is the payload of the CSV grid dump and of the rendered figures.
    """
    kn = P.degree()
    zs = disk_samples(samples, seed)
    lhs = np.abs(zs * P.derivative()(zs))
    rhs = kn * np.abs(P(zs))
    ratios = np.zeros(len(zs))
    np.divide(lhs, rhs, out=ratios, where=rhs > 0.0)
    return zs, lhs, rhs, ratios


def verify_pointwise_bernstein(
    P: SparsePolynomial,
    samples: int = 100_000,
    seed: int = 42,
    abs_tol: float | None = None,
) -> VerificationReport:
    """Check |z P'(z)| <= deg(P) |P(z)| over the sampled closed disk.

    A sample where P vanishes away from the origin shows up as a violation
    (the zero-freeness conclusion failed there), not as a sampling error.
    For multi-term polynomials the report also counts interior samples where
    equality holds within tolerance, since equality inside the disk is
    reserved for single-term polynomials.
    """
    if abs_tol is None:
        abs_tol = default_abs_tol(P)
    zs, lhs, rhs, _ = pointwise_grid(P, samples, seed)
    report = _ratio_report("pointwise_bernstein", zs, lhs, rhs, abs_tol)
    if P.term_count() >= 2:
        interior = np.abs(zs) < 1.0 - 1e-9
        report.extras["interior_equality_count"] = int(
            (interior & (rhs - lhs <= abs_tol)).sum()
        )
    nonzero = np.abs(zs) > 0
    report.extras["zero_value_hits"] = int((nonzero & (rhs == 0.0)).sum())
    return report


def verify_strict_interior(
    P: SparsePolynomial, samples: int = 100_000, seed: int = 42
) -> VerificationReport:
    """Check the strict bound |P'(z)| < deg(P) |P(z)| inside the disk.

    Applies to certified polynomials with constant term present (lowest
    exponent 0) and at least two terms; the caller vouches for
    certification.  The margin min(deg|P| - |P'|) over the samples is
    reported, and the check passes only if it is strictly positive.
    """
    if P.is_zero() or P.exponents[0] != 0 or P.term_count() < 2:
        raise NotApplicableError(
            "the strict interior bound needs a constant term and degree >= 1"
        )
    rng = np.random.default_rng(seed)
    radius = np.sqrt(rng.random(samples)) * (1.0 - INTERIOR_MARGIN)
    angle = 2.0 * np.pi * rng.random(samples)
    zs = np.concatenate([np.asarray([0j, -0.5 + 0j]), radius * np.exp(1j * angle)])

    kn = P.degree()
    lhs = np.abs(P.derivative()(zs))
    rhs = kn * np.abs(P(zs))
    margin = float((rhs - lhs).min())
    report = _ratio_report("strict_interior", zs, lhs, rhs, 0.0)
    bad = lhs >= rhs
    idx = np.flatnonzero(bad)
    report.violations = tuple(
        (complex(zs[i]), float(lhs[i]), float(rhs[i])) for i in idx[:VIOLATION_CAP]
    )
    report.violation_count = int(bad.sum())
    report.passed = margin > 0.0
    report.extras["min_margin"] = margin
    return report


def verify_aziz(
    P: SparsePolynomial,
    samples: int = 100_000,
    seed: int = 42,
    abs_tol: float | None = None,
) -> VerificationReport:
    """Check |z P'(z)| <= |deg(P) P(z) - z P'(z)| on the sampled disk.

    Valid for polynomials with no zeros inside the open unit disk; the root
    finder enforces the precondition.
    """
    if abs_tol is None:
        abs_tol = default_abs_tol(P)
    if not P.is_zero() and P.degree() >= 1:
        located = find_roots(P)
        if located.roots.roots and min(located.roots.moduli()) < 1.0 - 1e-9:
            raise NotApplicableError(
                "the rotated-remainder bound needs all roots outside the open unit disk"
            )
    kn = P.degree()
    zs = disk_samples(samples, seed)
    pz = P(zs)
    zdp = zs * P.derivative()(zs)
    lhs = np.abs(zdp)
    rhs = np.abs(kn * pz - zdp)
    return _ratio_report("aziz", zs, lhs, rhs, abs_tol)


def verify_combined_min(
    P: SparsePolynomial,
    samples: int = 100_000,
    seed: int = 42,
    abs_tol: float | None = None,
    certificate: Certificate | None = None,
) -> VerificationReport:
    """Check |zP'| <= min(|deg(P) P - zP'|, deg(P) |P|) on the sampled disk.

    Two routes make the combined bound valid: every root has modulus >= 2,
    or the polynomial is certified with a constant term present (so the
    closed disk is zero-free and both branches apply).  Passing a
    certificate skips recomputing it.
    """
    if abs_tol is None:
        abs_tol = default_abs_tol(P)
    applicable = False
    if P.is_zero():
        raise NotApplicableError("the combined bound needs a nonzero polynomial")
    if P.degree() == 0:
        applicable = True
    else:
        located = find_roots(P)
        if min(located.roots.moduli()) >= 2.0 - 1e-9:
            applicable = True
    if not applicable and P.exponents[0] == 0:
        cert = certificate if certificate is not None else check_condition(P)
        applicable = cert.is_certified()
    if not applicable:
        raise NotApplicableError(
            "the combined bound needs either all roots of modulus >= 2 or a "
            "certified polynomial with a constant term"
        )

    kn = P.degree()
    zs = disk_samples(samples, seed)
    pz = P(zs)
    zdp = zs * P.derivative()(zs)
    lhs = np.abs(zdp)
    rhs = np.minimum(np.abs(kn * pz - zdp), kn * np.abs(pz))
    return _ratio_report("combined_min", zs, lhs, rhs, abs_tol)


def verify_tail_chain(
    P: SparsePolynomial,
    samples: int = 100_000,
    seed: int = 42,
    abs_tol: float | None = None,
) -> VerificationReport:
    """Check the tail moduli chain |rho_0| >= |rho_1| >= ... at each sample.

    The dense-index chain over every cut 0..deg(P) subsumes the sparse one
    (between stored exponents consecutive tails coincide).  For certified
    polynomials the chain holds on the whole closed disk; for rejected ones
    the violations locate circle points where it breaks.
    """
    if abs_tol is None:
        abs_tol = default_abs_tol(P)
    kn = P.degree()
    zs = disk_samples(samples, seed)
    levels = np.stack([np.abs(P.tail(j)(zs)) for j in range(kn + 1)])

    upper = levels[:-1]
    lower = levels[1:]
    ratios = np.zeros(upper.shape)
    np.divide(lower, upper, out=ratios, where=upper > 0.0)
    flat = int(np.argmax(ratios))
    worst_ratio = float(ratios.reshape(-1)[flat])
    worst_witness = complex(zs[flat % len(zs)])

    bad = lower > upper + abs_tol
    bad_any = bad.any(axis=0)
    idx = np.flatnonzero(bad_any)
    listed = []
    for i in idx[:VIOLATION_CAP]:
        j = int(np.argmax(bad[:, i]))
        listed.append((complex(zs[i]), float(lower[j, i]), float(upper[j, i])))
    return VerificationReport(
        "tail_chain",
        len(zs),
        worst_ratio,
        worst_witness,
        tuple(listed),
        int(bad_any.sum()),
        not bad_any.any(),
    )


def verify_circle_bernstein(
    P: SparsePolynomial,
    samples: int = 4096,
    seed: int = 42,
    abs_tol: float | None = None,
) -> VerificationReport:
    """Check max|P'| <= deg(P) max|P| on a dense circle grid.

    The grid is deterministic (the seed is accepted for interface symmetry
    and ignored).
    """
    if abs_tol is None:
        abs_tol = default_abs_tol(P)
    grid = np.exp(1j * 2.0 * np.pi * np.arange(max(samples, 4)) / max(samples, 4))
    pvals = np.abs(P(grid))
    dvals = np.abs(P.derivative()(grid))
    kn = P.degree()
    lhs = float(dvals.max())
    rhs = float(kn * pvals.max())
    witness = complex(grid[int(np.argmax(dvals))])
    ratio = lhs / rhs if rhs > 0 else 0.0
    ok = lhs <= rhs + abs_tol
    violations = () if ok else ((witness, lhs, rhs),)
    return VerificationReport(
        "circle_bernstein", len(grid), ratio, witness, violations, 0 if ok else 1, ok
    )


def half_plane_equivalence(p: complex, q: complex) -> tuple[bool, bool]:
    """The two sides of the half-plane criterion: |p - q| <= |p| vs Re(p/q) >= 1/2.

    The predicates agree exactly in real arithmetic; in floats they may
    disagree only within a thin band around Re(p/q) = 1/2.
    """
    if q == 0:
        raise ValueError("the half-plane criterion requires q != 0")
    return (abs(p - q) <= abs(p), (p / q).real >= 0.5)


def half_plane_agreement(samples: int = 100_000, seed: int = 42) -> VerificationReport:
    """Agreement rate of the two half-plane predicates on random pairs.

    Pairs are drawn from the square [-2, 2]^2 for both components; the check
    passes when the predicates agree at every pair outside the
    |Re(p/q) - 1/2| <= 1e-12 band.  ``worst_ratio`` is the disagreement rate.
    """
    rng = np.random.default_rng(seed)
    p = rng.uniform(-2, 2, samples) + 1j * rng.uniform(-2, 2, samples)
    q = rng.uniform(-2, 2, samples) + 1j * rng.uniform(-2, 2, samples)
    keep = np.abs(q) > 0
    p, q = p[keep], q[keep]

    first = np.abs(p - q) <= np.abs(p)
    re = (p * np.conj(q)).real / np.abs(q) ** 2
    second = re >= 0.5
    band = np.abs(re - 0.5) <= AGREEMENT_BAND
    disagree = (first != second) & ~band

    idx = np.flatnonzero(disagree)
    listed = tuple((complex(p[i]), float(re[i]), 0.5) for i in idx[:VIOLATION_CAP])
    count = int(disagree.sum())
    report = VerificationReport(
        "half_plane_agreement",
        len(p),
        count / len(p),
        complex(p[idx[0]]) if count else 0j,
        listed,
        count,
        count == 0,
    )
    report.extras["band_count"] = int(band.sum())
    return report


def check_divided_difference_bound(
    P: SparsePolynomial, z: complex, w: complex
) -> DividedDifferenceBound:
    """Evaluate both sides of the sharp divided-difference estimate at (z, w).

    lhs = |z (P(z) - P(w))/(z - w)|, the factor is the degree-dependent
    multiplier, and tail_max is the largest |P(z) - partial sum|.  Equality
    is attained by two-term polynomials a_0 + a_n z^n when w is a positive
    real multiple of z.
    """
    lhs = abs(divided_difference(P, z, w))
    factor = divided_difference_factor(z, w, P.degree())
    tail_max = float(np.abs(partial_sum_remainders(P, z)).max())
    return DividedDifferenceBound(lhs, factor, tail_max)


def divided_difference_sampling(
    P: SparsePolynomial, trials: int = 10_000, seed: int = 42
) -> VerificationReport:
    """Random (z, w) trials of the divided-difference bound for a fixed P.

    z is drawn from the annulus 0.1 <= |z| <= 2 and w from the disk |w| <= 2.
    ``worst_ratio`` is the largest lhs / (factor * tail_max).
    """
    if P.is_zero() or P.degree() < 1:
        raise NotApplicableError("the divided-difference bound needs degree >= 1")
    rng = np.random.default_rng(seed)
    zr = rng.uniform(0.1, 2.0, trials)
    zt = 2.0 * np.pi * rng.random(trials)
    wr = rng.uniform(0.0, 2.0, trials)
    wt = 2.0 * np.pi * rng.random(trials)

    worst = 0.0
    witness = 0j
    listed = []
    count = 0
    for k in range(trials):
        z = zr[k] * np.exp(1j * zt[k])
        w = wr[k] * np.exp(1j * wt[k])
        bound = check_divided_difference_bound(P, z, w)
        denom = bound.factor * bound.tail_max
        if denom > 0:
            ratio = bound.lhs / denom
            if ratio > worst:
                worst = ratio
                witness = z
        if not bound.holds(BOUND_SLACK):
            count += 1
            if len(listed) < VIOLATION_CAP:
                listed.append((complex(z), bound.lhs, denom))
    return VerificationReport(
        "divided_difference_bound", trials, worst, witness, tuple(listed), count, count == 0
    )
