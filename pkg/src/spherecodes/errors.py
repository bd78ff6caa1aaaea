"""Exception types raised by the library.

Every error carries enough context (indices, values) to localize the
offending datum without re-running the computation.
"""

from __future__ import annotations


class SphereCodesError(Exception):
    """Base class for all library-specific errors."""


class CoincidentPoints(SphereCodesError):
    """Two points coincide under a potential that diverges at distance zero."""

    def __init__(self, i: int, j: int, squared_distance: float):
        self.i = i
        self.j = j
        self.squared_distance = squared_distance
        super().__init__(
            f"points {i} and {j} coincide (squared distance "
            f"{squared_distance:.3e}) under a potential singular at zero"
        )


class NotPSD(SphereCodesError):
    """A Gram matrix has an eigenvalue below the negativity tolerance."""

    def __init__(self, eigenvalue: float):
        self.eigenvalue = eigenvalue
        super().__init__(f"Gram matrix is not positive semidefinite (eigenvalue {eigenvalue:.3e})")


class RankTooHigh(SphereCodesError):
    """A Gram matrix needs more dimensions than the requested embedding."""

    def __init__(self, rank: int, n: int):
        self.rank = rank
        self.n = n
        super().__init__(f"Gram matrix has rank {rank}, which does not fit in {n} dimensions")


class DidNotConverge(SphereCodesError):
    """An iterative refinement failed to reach its tolerance."""


class NotNearCritical(SphereCodesError):
    """Polishing was started too far from a critical configuration."""

    def __init__(self, gradient_norm: float, threshold: float):
        self.gradient_norm = gradient_norm
        self.threshold = threshold
        super().__init__(
            f"gradient sup-norm {gradient_norm:.3e} exceeds the polish threshold {threshold:.3e}"
        )


class ParameterOutOfRange(SphereCodesError):
    """A family parameter lies outside its documented interval."""

    def __init__(self, name: str, value: float, interval: str):
        self.name = name
        self.value = value
        self.interval = interval
        super().__init__(f"parameter {name} = {value!r} outside {interval}")


class EmptyShortening(SphereCodesError):
    """Shortening a code removed every word."""


class AmbiguousClustering(SphereCodesError):
    """Two cluster representatives sit within ten tolerances of each other."""

    def __init__(self, first: float, second: float, tol: float):
        self.first = first
        self.second = second
        self.tol = tol
        super().__init__(
            f"cluster representatives {first!r} and {second!r} are closer than 10x tol {tol:g}"
        )


class NotAnAutomorphism(SphereCodesError):
    """A permutation does not preserve the pairwise inner products."""


class SpanDeficient(SphereCodesError):
    """A configuration does not span its ambient space."""

    def __init__(self, rank: int, n: int):
        self.rank = rank
        self.n = n
        super().__init__(f"configuration spans only {rank} of {n} dimensions")


class ShapeMismatch(SphereCodesError):
    """Configurations with different (n, N) cannot be compared."""


class TooFewLevels(SphereCodesError):
    """Gap statistics need at least three energy levels."""


class NotOnSphere(SphereCodesError):
    """A stored point deviates too far from unit norm to renormalize."""

    def __init__(self, index: int, norm: float):
        self.index = index
        self.norm = norm
        super().__init__(f"point {index} has norm {norm!r}, too far from 1 to renormalize")


class ParseError(SphereCodesError):
    """A config or report file is malformed."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class UnknownEntry(SphereCodesError):
    """A requested catalog entry name is not registered."""
