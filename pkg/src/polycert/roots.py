"""Root finding and contour-based zero counting.

find_roots deflates the exact power-of-z factor, then runs the
Aberth-Ehrlich simultaneous iteration on the dense cofactor from points on
a circle just outside the Cauchy bound.  Components freeze individually
once their correction is below tolerance or their residual reaches the
floating-point floor of Horner evaluation, which keeps multiple roots from
stalling the sweep.  Converged points within a small radius are clustered
into one root with summed multiplicity; a tight cluster of simple roots is
numerically indistinguishable from a genuine multiple root, so the reported
multiplicity is inferred, not proven.

count_roots_in_disk integrates the logarithmic derivative around a circle:
the trapezoid mean of Re(z P'/P) over the contour is the number of zeros
inside, and converges geometrically in the number of nodes with rate set by
the nearest root's distance to the contour.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContourProximityError, NonConvergenceError, NotApplicableError
from .poly import RootSet, SparsePolynomial

CLUSTER_RADIUS = 1e-6
CONTOUR_GUARD = 1e-3
RESIDUAL_SCALE = 1e-8
MAX_SWEEPS = 120
UNIT_DISK_MARGIN = 1e-9


@dataclass(frozen=True)
class RootFindReport:
    """Roots with multiplicities plus convergence diagnostics."""

    roots: RootSet
    max_residual: float
    iterations: int

    def to_json_dict(self) -> dict:
        return {
            "roots": [
                {"re": loc.real, "im": loc.imag, "mult": mult}
                for loc, mult in self.roots.roots
            ],
            "max_residual": self.max_residual,
            "iterations": self.iterations,
        }


@dataclass(frozen=True)
class DiskCountReport:
    """Quadrature count of zeros inside |z| < radius plus companion integrals.

    ``winding_value`` is the raw trapezoid mean before rounding.  The
    companion fields integrate |P'/P| over the unit circle and record its
    grid maximum; they are None when a root sits too close to the unit
    circle for the integral to be trustworthy.  When available, the count of
    roots inside the unit disk must not exceed the integral, which must not
    exceed the grid maximum (small slack for quadrature error).
    """

    count: int
    winding_value: float
    quad_points: int
    log_deriv_integral: float | None = None
    circle_max: float | None = None
    inside_unit_count: int | None = None

    def sandwich_holds(self, tol: float = 1e-6) -> bool | None:
        if self.log_deriv_integral is None:
            return None
        return (
            self.inside_unit_count <= self.log_deriv_integral + tol
            and self.log_deriv_integral <= self.circle_max + tol
        )


@dataclass(frozen=True)
class GovilChainReport:
    """Sampled extrema of |P'/P| on the circle against the root-based chain.

    For a degree-n polynomial with every zero inside the open unit disk:
    n / (1 + |z_m|) <= min <= n <= max, with z_m the largest-modulus zero.
    """

    degree: int
    largest_root_modulus: float
    lower_estimate: float
    sampled_min: float
    sampled_max: float
    samples: int
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "check": "govil_chain",
            "degree": self.degree,
            "largest_root_modulus": self.largest_root_modulus,
            "lower_estimate": self.lower_estimate,
            "sampled_min": self.sampled_min,
            "sampled_max": self.sampled_max,
            "samples": self.samples,
            "passed": self.passed,
        }


def _horner_with_error(coeffs: np.ndarray, z: np.ndarray):
    """Value, derivative, and a running magnitude for the roundoff floor."""
    value = np.full(z.shape, coeffs[-1], dtype=complex)
    deriv = np.zeros(z.shape, dtype=complex)
    mag = np.full(z.shape, abs(coeffs[-1]), dtype=float)
    az = np.abs(z)
    for c in coeffs[-2::-1]:
        deriv = deriv * z + value
        value = value * z + c
        mag = mag * az + abs(c)
    return value, deriv, mag


def find_roots(P: SparsePolynomial, tol: float = 1e-12) -> RootFindReport:
    """All roots of P with multiplicities, sorted by modulus.

    The z^(k_0) factor is deflated exactly (root 0 with multiplicity k_0);
    the remaining cofactor is solved by Aberth-Ehrlich.  Raises
    :class:`NonConvergenceError` carrying the partial report if the sweep
    cap is reached while the residual is still above the corpus tolerance.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if P.is_zero() or P.degree() < 1:
        raise ValueError("root finding needs degree >= 1")

    k0 = P.exponents[0]
    dense = P.dense_coefficients()
    cofactor = dense[k0:]
    m = len(cofactor) - 1
    eps = float(np.finfo(float).eps)

    origin = [(0j, k0)] if k0 > 0 else []
    if m == 0:
        report = RootFindReport(RootSet.from_pairs(origin), abs(P(0j)), 0)
        return report

    radius = 1.0 + float(np.max(np.abs(cofactor[:-1]) / abs(cofactor[-1]))) if m >= 1 else 1.0
    angles = 2.0 * np.pi * (np.arange(m) + 0.375) / m
    z = radius * np.exp(1j * angles)

    done = np.zeros(m, dtype=bool)
    sweeps = 0
    for sweeps in range(1, MAX_SWEEPS + 1):
        value, deriv, mag = _horner_with_error(cofactor, z)
        floor = 4.0 * eps * (2 * m + 1) * mag
        done |= np.abs(value) <= floor

        if done.all():
            break

        with np.errstate(divide="ignore", invalid="ignore"):
            newton = np.where(deriv != 0, value / np.where(deriv != 0, deriv, 1), 0.0)
        # Repulsion from the other iterates (Aberth correction).
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        repulse = inv.sum(axis=1)
        denom = 1.0 - newton * repulse
        step = np.where(np.abs(denom) > 0, newton / np.where(denom != 0, denom, 1), newton)

        stuck = (deriv == 0) & ~done
        if stuck.any():
            step = step.copy()
            step[stuck] = (1.0 + np.abs(z[stuck])) * np.exp(1j * sweeps)

        active = ~done
        z = z - np.where(active, step, 0.0)
        done |= active & (np.abs(step) < tol * (1.0 + np.abs(z)))

        if done.all():
            break

    clusters: list[list[complex]] = []
    order = np.argsort(np.abs(z), kind="stable")
    for idx in order:
        point = complex(z[idx])
        for cluster in clusters:
            center = sum(cluster) / len(cluster)
            if abs(point - center) <= CLUSTER_RADIUS:
                cluster.append(point)
                break
        else:
            clusters.append([point])

    pairs = list(origin)
    for cluster in clusters:
        center = sum(cluster) / len(cluster)
        pairs.append((center, len(cluster)))
    rootset = RootSet.from_pairs(pairs)

    residual = max((abs(P(loc)) for loc, _ in rootset.roots), default=0.0)
    report = RootFindReport(rootset, float(residual), sweeps)

    coeff_scale = 1.0 + max(abs(a) for a in P.coefficients)
    if not done.all() and residual > RESIDUAL_SCALE * coeff_scale:
        raise NonConvergenceError(
            f"root iteration did not converge after {sweeps} sweeps "
            f"(max residual {residual:.3e})",
            partial=report,
        )
    return report


def _auto_quad_points(degree: int, rel_gap: float) -> int:
    # Geometric decay rate ~ exp(-N * rel_gap); push the aliased mass below 0.25.
    needed = int(np.ceil(np.log(20.0 * degree) / max(rel_gap, 1e-12)))
    return max(4 * degree, 256, needed)


def count_roots_in_disk(
    P: SparsePolynomial, radius: float, quad_points: int | None = None
) -> DiskCountReport:
    """Number of zeros (with multiplicity) of modulus < radius, by quadrature.

    Requires every root to stay at least 1e-3 away from the contour (checked
    with :func:`find_roots`); a closer root raises
    :class:`ContourProximityError` naming it.  The companion unit-circle
    integral of |P'/P| and its grid maximum are attached whenever the roots
    also keep that distance from the unit circle.
    """
    if radius <= 0:
        raise ValueError("radius must be positive")
    kn = P.degree()
    if quad_points is not None and quad_points < 4 * kn:
        raise ValueError(f"quad_points must be at least 4*deg = {4 * kn}")

    located = find_roots(P)
    moduli = np.array([abs(loc) for loc, _ in located.roots.roots])
    mults = np.array([mult for _, mult in located.roots.roots])

    distances = np.abs(moduli - radius)
    if distances.size and distances.min() < CONTOUR_GUARD:
        offender = located.roots.roots[int(np.argmin(distances))][0]
        raise ContourProximityError(offender, float(distances.min()), radius)

    if quad_points is None:
        rel_gap = float(distances.min()) / radius if distances.size else 1.0
        quad_points = _auto_quad_points(kn, rel_gap)

    theta = 2.0 * np.pi * np.arange(quad_points) / quad_points
    contour = radius * np.exp(1j * theta)
    dP = P.derivative()
    winding = float(np.mean((contour * dP(contour) / P(contour)).real))
    count = int(round(winding))

    integral = None
    circle_max = None
    inside_unit = None
    unit_gaps = np.abs(moduli - 1.0)
    if not unit_gaps.size or unit_gaps.min() >= CONTOUR_GUARD:
        n_unit = max(4096, 64 * kn)
        unit = np.exp(1j * 2.0 * np.pi * np.arange(n_unit) / n_unit)
        ratio = np.abs(dP(unit) / P(unit))
        integral = float(np.mean(ratio))
        circle_max = float(ratio.max())
        inside_unit = int(mults[moduli < 1.0].sum()) if moduli.size else 0

    return DiskCountReport(count, winding, quad_points, integral, circle_max, inside_unit)


def govil_chain_check(
    P: SparsePolynomial, samples: int = 10_000, seed: int = 42, tol: float = 1e-6
) -> GovilChainReport:
    """Sampled check of the |P'/P| chain for polynomials zero-only-inside.

    Raises :class:`NotApplicableError` unless every root lies strictly inside
    the unit disk.  Sampling is seeded and deterministic.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    located = find_roots(P)
    moduli = located.roots.moduli()
    if not moduli:
        raise NotApplicableError("the chain needs at least one root")
    z_max = max(moduli)
    if z_max >= 1.0 - UNIT_DISK_MARGIN:
        raise NotApplicableError(
            f"all roots must lie in the open unit disk; largest modulus is {z_max:.6f}"
        )

    n = P.degree()
    rng = np.random.default_rng(seed)
    points = np.exp(1j * 2.0 * np.pi * rng.random(samples))
    ratio = np.abs(P.derivative()(points) / P(points))
    sampled_min = float(ratio.min())
    sampled_max = float(ratio.max())
    lower = n / (1.0 + z_max)

    ok = (
        lower <= sampled_min + tol
        and sampled_min <= n + tol
        and n <= sampled_max + tol
    )
    return GovilChainReport(n, z_max, lower, sampled_min, sampled_max, samples, ok)
