"""Structural analysis of point configurations.

Distance spectra, balancedness, parameter counting, spherical-design
strength, fiber analysis of 4-dimensional configurations, recognition of
exact values, and a small SVG renderer for plane projections.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .energy import PointConfig, pair_squared_distances
from .errors import ShapeMismatch

__all__ = [
    "DistanceClass",
    "DistanceSpectrum",
    "BalanceReport",
    "HopfImage",
    "ExactValue",
    "distance_spectrum",
    "is_balanced",
    "parameter_count",
    "design_strength",
    "hopf_map",
    "recognize_value",
    "project_svg",
]

DEFAULT_CLUSTER_TOL = 1e-6
BALANCE_TOL = 1e-9
RANK_TOL = 1e-8
DESIGN_TOL = 1e-8
MERGE_TOL = 1e-9


@dataclass(frozen=True)
class DistanceClass:
    """One cluster of squared distances with its contributing pairs."""

    representative: float
    multiplicity: int
    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class DistanceSpectrum:
    """All squared-distance classes of a configuration."""

    classes: tuple[DistanceClass, ...]
    tolerance: float
    # representative pairs closer than ten times the clustering scale are
    # flagged here rather than raised, so callers can decide what to do
    ambiguous: tuple[tuple[float, float], ...]

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(c.representative for c in self.classes)


def distance_spectrum(
    config: PointConfig, tol: float = DEFAULT_CLUSTER_TOL
) -> DistanceSpectrum:
    """Single-linkage clustering of the pairwise squared distances.

    The tolerance is relative to the largest squared distance; two
    consecutive sorted values further apart than that break a cluster.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    r = pair_squared_distances(config)
    N = len(config.points)
    pairs = [(r[i, j], i, j) for i in range(N) for j in range(i + 1, N)]
    pairs.sort()
    scale = tol * max(pairs[-1][0], 1e-300)
    classes = []
    start = 0
    for idx in range(1, len(pairs) + 1):
        if idx == len(pairs) or pairs[idx][0] - pairs[idx - 1][0] > scale:
            chunk = pairs[start:idx]
            rep = float(np.mean([p[0] for p in chunk]))
            classes.append(
                DistanceClass(
                    representative=rep,
                    multiplicity=len(chunk),
                    pairs=tuple((i, j) for _, i, j in chunk),
                )
            )
            start = idx
    flagged = []
    for a, b in zip(classes, classes[1:]):
        if b.representative - a.representative < 10.0 * scale:
            flagged.append((a.representative, b.representative))
    return DistanceSpectrum(
        classes=tuple(classes), tolerance=tol, ambiguous=tuple(flagged)
    )


@dataclass(frozen=True)
class BalanceReport:
    """Outcome of the balance test, with the worst violation as witness."""

    balanced: bool
    worst_norm: float
    witness_point: int | None = None
    witness_distance: float | None = None

    def __bool__(self) -> bool:
        return self.balanced


def _class_sum_fields(config: PointConfig, spectrum: DistanceSpectrum) -> np.ndarray:
    """Tangential class-sum fields, one (N, n) slab per distance class."""
    x = config.points
    N, n = x.shape
    fields = np.zeros((len(spectrum.classes), N, n))
    for c, cls in enumerate(spectrum.classes):
        for i, j in cls.pairs:
            fields[c, i] += x[j]
            fields[c, j] += x[i]
        radial = np.einsum("in,in->i", fields[c], x)
        fields[c] -= radial[:, None] * x
    return fields


def is_balanced(config: PointConfig, tol: float = BALANCE_TOL) -> BalanceReport:
    """Check that every per-distance class sum points along its base point.

    For each point x and each occurring distance, the sum of all points at
    that distance from x must have vanishing tangential component.
    """
    spectrum = distance_spectrum(config)
    fields = _class_sum_fields(config, spectrum)
    norms = np.linalg.norm(fields, axis=2)
    worst = float(norms.max()) if norms.size else 0.0
    if worst <= tol:
        return BalanceReport(balanced=True, worst_norm=worst)
    c, i = np.unravel_index(np.argmax(norms), norms.shape)
    return BalanceReport(
        balanced=False,
        worst_norm=worst,
        witness_point=int(i),
        witness_distance=spectrum.classes[c].representative,
    )


def parameter_count(config: PointConfig, tol: float = RANK_TOL) -> int:
    """Dimension of the span of the tangential per-class force fields.

    Each distance class pushes its pairs apart; stacking one flattened
    tangential field per class and taking the numerical rank counts the
    independent deformation directions.  Balanced configurations give 0.
    """
    spectrum = distance_spectrum(config)
    fields = _class_sum_fields(config, spectrum)
    flat = fields.reshape(len(spectrum.classes), -1)
    sv = np.linalg.svd(flat, compute_uv=False)
    if sv.size == 0 or sv[0] <= 1e-9 * len(config.points):
        return 0
    return int((sv > tol * sv[0]).sum())


def _gegenbauer_sums(gram: np.ndarray, n: int, max_degree: int) -> list[float]:
    """Sums of normalized Gegenbauer values over all ordered pairs.

    Uses the three-term recurrence in the ultraspherical parameter
    (n-2)/2, normalized so every polynomial takes value 1 at t = 1.  The
    n = 2 limit is the Chebyshev recurrence.
    """
    t = np.clip(gram, -1.0, 1.0)
    lam = 0.5 * (n - 2)
    sums = []
    if n == 2:
        prev = np.ones_like(t)
        cur = t.copy()
        for k in range(1, max_degree + 1):
            sums.append(float(cur.sum()))
            prev, cur = cur, 2.0 * t * cur - prev
        return sums
    prev = np.ones_like(t)
    prev1 = 1.0
    cur = 2.0 * lam * t
    cur1 = 2.0 * lam
    for k in range(1, max_degree + 1):
        sums.append(float(cur.sum()) / cur1)
        nxt = (2.0 * (k + lam) * t * cur - (k + 2.0 * lam - 1.0) * prev) / (k + 1)
        nxt1 = (2.0 * (k + lam) * cur1 - (k + 2.0 * lam - 1.0) * prev1) / (k + 1)
        prev, cur = cur, nxt
        prev1, cur1 = cur1, nxt1
    return sums


def design_strength(config: PointConfig, max_degree: int) -> int:
    """Largest t up to max_degree for which the first t moment sums vanish."""
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    x = config.points
    N, n = x.shape
    sums = _gegenbauer_sums(x @ x.T, n, max_degree)
    threshold = DESIGN_TOL * N * N
    strength = 0
    for k, s in enumerate(sums, start=1):
        if abs(s) > threshold:
            break
        strength = k
    return strength


@dataclass(frozen=True)
class HopfImage:
    """Fiber images of a 4-dimensional configuration on the 2-sphere."""

    config: PointConfig
    multiplicities: tuple[int, ...]


def hopf_map(config: PointConfig, tol: float = MERGE_TOL) -> HopfImage:
    """Image of the points of S^3 under the fibration to S^2.

    Identifying R^4 with C^2 via z = x0 + i x1 and w = x2 + i x3, the
    point (z, w) maps to the inverse stereographic image of z/w; a zero w
    lands on the north pole.  Images closer than the tolerance are merged
    and reported with their fiber multiplicities.
    """
    if config.n != 4:
        raise ShapeMismatch(f"fiber analysis needs 4 coordinates, got {config.n}")
    x = config.points
    z = x[:, 0] + 1j * x[:, 1]
    w = x[:, 2] + 1j * x[:, 3]
    zw = z * np.conj(w)
    images = np.column_stack(
        [2.0 * zw.real, 2.0 * zw.imag, np.abs(z) ** 2 - np.abs(w) ** 2]
    )
    reps: list[np.ndarray] = []
    counts: list[int] = []
    for img in images:
        for k, rep in enumerate(reps):
            if np.linalg.norm(img - rep) <= tol:
                counts[k] += 1
                break
        else:
            reps.append(img)
            counts.append(1)
    return HopfImage(
        config=PointConfig.from_rows(np.array(reps)), multiplicities=tuple(counts)
    )


@dataclass(frozen=True)
class ExactValue:
    """A recognized closed form: p/q rational or (p + q sqrt(disc))/r."""

    kind: str
    residual: float
    p: int = 0
    q: int = 0
    r: int = 1
    disc: int = 0

    @property
    def value(self) -> float:
        if self.kind == "rational":
            return self.p / self.q
        if self.kind == "quadratic":
            return (self.p + self.q * math.sqrt(self.disc)) / self.r
        raise ValueError("no value for an unrecognized input")

    def describe(self) -> str:
        if self.kind == "rational":
            return f"{self.p}/{self.q}"
        if self.kind == "quadratic":
            return f"({self.p} + {self.q}*sqrt({self.disc}))/{self.r}"
        return "unrecognized"


RESIDUAL_TOL = 1e-10


def _squarefree_split(value: int) -> tuple[int, int]:
    # value = square * core with core squarefree
    square = 1
    core = value
    f = 2
    while f * f <= core:
        while core % (f * f) == 0:
            core //= f * f
            square *= f
        f += 1
    return square, core


def recognize_value(
    x: float, max_den: int = 10**4, max_disc: int = 1000
) -> ExactValue:
    """Recognize a float as a rational or quadratic irrational.

    Tries continued fractions up to the denominator bound first, then an
    integer-relation search on (x^2, x, 1) whose root is reduced to the
    form (p + q sqrt(D))/r with squarefree D.
    """
    if abs(x) > 10.0:
        raise ValueError("only values with magnitude at most 10 are searched")
    frac = Fraction(x).limit_denominator(max_den)
    residual = abs(x - frac.numerator / frac.denominator)
    if residual <= RESIDUAL_TOL:
        return ExactValue(
            kind="rational",
            residual=residual,
            p=frac.numerator,
            q=frac.denominator,
        )
    relation = mpmath.pslq([x * x, x, 1.0], tol=mpmath.mpf(1e-12), maxcoeff=10**6)
    if relation is not None:
        a, b, c = (int(v) for v in relation)
        if a != 0:
            disc = b * b - 4 * a * c
            if disc > 0:
                square, core = _squarefree_split(disc)
                for sign in (1, -1):
                    p, q, r = -b, sign * square, 2 * a
                    g = math.gcd(math.gcd(abs(p), abs(q)), abs(r))
                    p, q, r = p // g, q // g, r // g
                    if r < 0:
                        p, q, r = -p, -q, -r
                    candidate = (p + q * math.sqrt(core)) / r
                    residual = abs(candidate - x)
                    if (
                        residual <= RESIDUAL_TOL
                        and core <= max_disc
                        and max(abs(p), abs(q), abs(r)) <= 1000
                    ):
                        return ExactValue(
                            kind="quadratic",
                            residual=residual,
                            p=p,
                            q=q,
                            r=r,
                            disc=core,
                        )
    return ExactValue(kind="unrecognized", residual=math.inf)


def _minimal_pairs(config: PointConfig) -> list[tuple[int, int]]:
    r = pair_squared_distances(config)
    N = len(config.points)
    masked = np.where(np.eye(N, dtype=bool), np.inf, r)
    cutoff = masked.min() * (1.0 + 1e-9) + 1e-12
    return [(i, j) for i in range(N) for j in range(i + 1, N) if r[i, j] <= cutoff]


def project_svg(config: PointConfig, plane_seed: int) -> str:
    """Orthogonal projection onto a seeded random plane, as an SVG document.

    Draws the unit-circle outline, every projected point, and a segment
    for each pair at the minimal distance.  Byte-identical for identical
    inputs and seeds.
    """
    rng = np.random.default_rng(plane_seed)
    basis, _ = np.linalg.qr(rng.standard_normal((config.n, 2)))
    xy = config.points @ basis
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.05 -1.05 2.10 2.10">',
        '<circle cx="0.000000" cy="0.000000" r="1.000000" fill="none" '
        'stroke="#888888" stroke-width="0.004"/>',
    ]
    for i, j in _minimal_pairs(config):
        lines.append(
            f'<line x1="{xy[i, 0]:.6f}" y1="{xy[i, 1]:.6f}" '
            f'x2="{xy[j, 0]:.6f}" y2="{xy[j, 1]:.6f}" '
            'stroke="#555555" stroke-width="0.004"/>'
        )
    for p in xy:
        lines.append(
            f'<circle cx="{p[0]:.6f}" cy="{p[1]:.6f}" r="0.012" fill="#1f6fb2"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
