"""Sparse complex polynomials and divided-difference machinery.

A polynomial P(z) = sum_nu a_nu z^(k_nu) is stored as an ordered term list
with strictly increasing exponents and nonzero coefficients.  Several
operations work on the dense embedding (missing exponents filled with zero
coefficients): the divided-difference expansion, its sharp bounding factor,
and the root finder all need contiguous coefficient arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PoleError, PolynomialFormatError

# |P(z)| below this is treated as an exact pole rather than a tiny value.
POLE_GUARD = 1e-300


@dataclass(frozen=True)
class SparsePolynomial:
    """Term list (exponent, coefficient) with k_0 < k_1 < ... and a_nu != 0.

    An empty term list represents the zero polynomial (it arises as the
    derivative of a constant); most operations reject it explicitly.
    """

    terms: tuple[tuple[int, complex], ...]

    def __post_init__(self):
        normalized = []
        last = -1
        for i, term in enumerate(self.terms):
            k, a = term
            if isinstance(k, bool) or int(k) != k:
                raise ValueError(f"terms[{i}]: exponent must be an integer, got {k!r}")
            k = int(k)
            a = complex(a)
            if k < 0:
                raise ValueError(f"terms[{i}]: exponent must be nonnegative, got {k}")
            if k <= last:
                raise ValueError(f"terms[{i}]: exponents must be strictly increasing")
            if a == 0:
                raise ValueError(f"terms[{i}]: zero coefficient at exponent {k}")
            normalized.append((k, a))
            last = k
        object.__setattr__(self, "terms", tuple(normalized))

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_coefficients(cls, coefficients) -> "SparsePolynomial":
        """Build from a dense ascending coefficient sequence, dropping zeros."""
        return cls(tuple((k, complex(c)) for k, c in enumerate(coefficients) if complex(c) != 0))

    @classmethod
    def from_json_dict(cls, obj) -> "SparsePolynomial":
        """Parse the shared ``{"terms": [[k, re, im], ...]}`` payload.

        Rejects zero coefficients, duplicate or decreasing exponents, and
        malformed entries, raising :class:`PolynomialFormatError` with the
        offending field.
        """
        if not isinstance(obj, dict) or "terms" not in obj:
            raise PolynomialFormatError('expected an object with a "terms" key', "terms")
        raw = obj["terms"]
        if not isinstance(raw, list):
            raise PolynomialFormatError("expected a list of [k, re, im] triples", "terms")
        terms = []
        last = -1
        for i, entry in enumerate(raw):
            field = f"terms[{i}]"
            if not isinstance(entry, (list, tuple)) or len(entry) != 3:
                raise PolynomialFormatError("expected a [k, re, im] triple", field)
            k, re, im = entry
            if isinstance(k, bool) or not isinstance(k, int):
                raise PolynomialFormatError(f"exponent must be an integer, got {k!r}", field)
            if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in (re, im)):
                raise PolynomialFormatError("coefficient parts must be numbers", field)
            if k < 0:
                raise PolynomialFormatError(f"exponent must be nonnegative, got {k}", field)
            if k == last:
                raise PolynomialFormatError(f"duplicate exponent {k}", field)
            if k < last:
                raise PolynomialFormatError(f"exponents must be strictly increasing, got {k} after {last}", field)
            a = complex(float(re), float(im))
            if a == 0:
                raise PolynomialFormatError(f"zero coefficient at exponent {k}", field)
            terms.append((k, a))
            last = k
        if not terms:
            raise PolynomialFormatError("polynomial must have at least one term", "terms")
        return cls(tuple(terms))

    def to_json_dict(self) -> dict:
        return {"terms": [[k, a.real, a.imag] for k, a in self.terms]}

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return self.terms[-1][0]

    def term_count(self) -> int:
        return len(self.terms)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.terms)

    @property
    def coefficients(self) -> tuple[complex, ...]:
        return tuple(a for _, a in self.terms)

    def coefficient_mass(self) -> float:
        """Sum of coefficient magnitudes; scales absolute tolerances."""
        return float(sum(abs(a) for _, a in self.terms))

    def dense_coefficients(self) -> np.ndarray:
        """Ascending coefficients c_0..c_{k_n} with zeros at missing exponents."""
        if not self.terms:
            return np.zeros(0, dtype=complex)
        dense = np.zeros(self.degree() + 1, dtype=complex)
        for k, a in self.terms:
            dense[k] = a
        return dense

    # -- evaluation and calculus ---------------------------------------------

    def __call__(self, z):
        """Evaluate by Horner on the dense embedding; z may be a numpy array."""
        if not self.terms:
            if isinstance(z, np.ndarray):
                return np.zeros(z.shape, dtype=complex)
            return 0j
        dense = self.dense_coefficients()
        if isinstance(z, np.ndarray):
            acc = np.full(z.shape, dense[-1], dtype=complex)
            for c in dense[-2::-1]:
                acc *= z
                acc += c
            return acc
        acc = dense[-1]
        for c in dense[-2::-1]:
            acc = acc * z + c
        return complex(acc)

    def derivative(self) -> "SparsePolynomial":
        return SparsePolynomial(tuple((k - 1, k * a) for k, a in self.terms if k >= 1))

    def tail(self, k: int) -> "SparsePolynomial":
        """Keep exactly the terms with exponent >= k (0 <= k <= degree)."""
        if not 0 <= k <= self.degree():
            raise ValueError(f"tail cut {k} outside [0, {self.degree()}]")
        return SparsePolynomial(tuple(t for t in self.terms if t[0] >= k))


@dataclass(frozen=True)
class RootSet:
    """Distinct roots with multiplicities, ordered by nondecreasing modulus."""

    roots: tuple[tuple[complex, int], ...]

    def __post_init__(self):
        normalized = []
        prev = -1.0
        for i, (loc, mult) in enumerate(self.roots):
            loc = complex(loc)
            if isinstance(mult, bool) or int(mult) != mult or mult < 1:
                raise ValueError(f"roots[{i}]: multiplicity must be a positive integer")
            if abs(loc) < prev - 1e-15:
                raise ValueError("roots must be ordered by nondecreasing modulus")
            prev = abs(loc)
            normalized.append((loc, int(mult)))
        object.__setattr__(self, "roots", tuple(normalized))

    @classmethod
    def from_pairs(cls, pairs) -> "RootSet":
        """Sort (location, multiplicity) pairs by modulus; ties broken by re, im."""
        ordered = sorted(
            ((complex(loc), int(mult)) for loc, mult in pairs),
            key=lambda p: (abs(p[0]), p[0].real, p[0].imag),
        )
        return cls(tuple(ordered))

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.roots)

    def moduli(self) -> tuple[float, ...]:
        return tuple(abs(loc) for loc, _ in self.roots)


@dataclass(frozen=True)
class DividedDifferenceBound:
    """Evaluated sides of the sharp divided-difference estimate.

    lhs = |z (P(z) - P(w)) / (z - w)| must not exceed factor * tail_max
    beyond floating-point slack.
    """

    lhs: float
    factor: float
    tail_max: float

    def slack(self) -> float:
        return self.factor * self.tail_max - self.lhs

    def holds(self, tolerance: float = 1e-10) -> bool:
        return self.lhs <= self.factor * self.tail_max + tolerance


def log_derivative(P: SparsePolynomial, z: complex) -> complex:
    """z P'(z) / P(z); raises :class:`PoleError` when |P(z)| underflows."""
    value = P(z)
    if abs(value) < POLE_GUARD:
        raise PoleError("logarithmic derivative evaluated at a zero of P", z)
    return z * P.derivative()(z) / value


def partial_fraction_real(roots: RootSet, n: int, z: complex) -> float:
    """Real part of z P'(z)/P(z) expressed through the zeros of P.

    Equals n/2 + (1/2) sum_k r_k (|z|^2 - |z_k|^2) / |z - z_k|^2 for a
    degree-n polynomial with the given root set.
    """
    z = complex(z)
    acc = 0.5 * n
    zz = abs(z) ** 2
    for loc, mult in roots.roots:
        d2 = abs(z - loc) ** 2
        if d2 < POLE_GUARD:
            raise PoleError("partial fraction evaluated at a root", z)
        acc += 0.5 * mult * (zz - abs(loc) ** 2) / d2
    return acc


def divided_difference(P: SparsePolynomial, z: complex, w: complex) -> complex:
    """z (P(z) - P(w)) / (z - w), continued as z P'(z) when w = z."""
    if z == 0:
        raise ValueError("divided difference requires z != 0")
    if z == w:
        return z * P.derivative()(z)
    return z * (P(z) - P(w)) / (z - w)


def partial_sum_remainders(P: SparsePolynomial, z: complex) -> np.ndarray:
    """P(z) minus each dense partial sum: entry k is P(z) - sum_{j<=k} c_j z^j.

    Length equals deg P; entry k is the value at z of the dense tail that
    keeps exponents > k.
    """
    dense = P.dense_coefficients()
    kn = len(dense) - 1
    if kn < 1:
        raise ValueError("remainders need degree >= 1")
    pz = P(z)
    out = np.empty(kn, dtype=complex)
    partial = 0j
    zpow = 1 + 0j
    for k in range(kn):
        partial += dense[k] * zpow
        out[k] = pz - partial
        zpow *= z
    return out


def divided_difference_expansion(P: SparsePolynomial, z: complex, w: complex) -> complex:
    """Summation-by-parts form: sum_k (P(z) - sum_{j<=k} c_j z^j) (w/z)^k.

    Agrees with :func:`divided_difference` for every w (including w = z).
    """
    if z == 0:
        raise ValueError("divided difference requires z != 0")
    remainders = partial_sum_remainders(P, z)
    ratio = w / z
    acc = 0j
    rpow = 1 + 0j
    for rem in remainders:
        acc += rem * rpow
        rpow *= ratio
    return acc


def divided_difference_factor(z: complex, w: complex, n: int) -> float:
    """Sharp multiplier bounding the divided difference of a degree-n polynomial.

    Equals (|z|^n - |w|^n) / (|z|^{n-1} (|z| - |w|)) for |z| != |w| and n on
    the diagonal; computed as the geometric sum of (|w|/|z|)^k, which covers
    both branches stably.
    """
    if z == 0:
        raise ValueError("the bounding factor requires z != 0")
    if n < 1:
        raise ValueError("the bounding factor requires degree n >= 1")
    q = abs(w) / abs(z)
    acc = 1.0
    term = 1.0
    for _ in range(n - 1):
        term *= q
        acc += term
    return acc
