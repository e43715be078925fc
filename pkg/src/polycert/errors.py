"""Exception types shared across the package."""

from __future__ import annotations


class PolynomialFormatError(ValueError):
    """A polynomial payload violates the term-list schema.

    ``field`` points at the offending entry (e.g. ``terms[3]``) so the CLI
    can print a usable diagnostic.
    """

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        super().__init__(message if field is None else f"{field}: {message}")


class PoleError(ArithmeticError):
    """An evaluation point collides (within guard) with a zero of the denominator."""

    def __init__(self, message: str, point: complex):
        self.point = point
        super().__init__(f"{message} at z = {point}")


class ContourProximityError(ValueError):
    """A root sits too close to the integration contour for a reliable count."""

    def __init__(self, root: complex, distance: float, radius: float):
        self.root = root
        self.distance = distance
        super().__init__(
            f"root {root} lies {distance:.3e} from the contour |z| = {radius}; "
            "the quadrature count is unreliable"
        )


class NotApplicableError(Exception):
    """The precondition of a check does not hold for this input.

    Distinct from a failed check: the question itself is not meaningful here.
    """


class NonConvergenceError(RuntimeError):
    """An iteration cap was reached; ``partial`` carries the best available result."""

    def __init__(self, message: str, partial=None):
        self.partial = partial
        super().__init__(message)
