"""Explicit point configurations built from closed-form data.

Everything here is deterministic: simplices and their derived codes, the
antipodal simplex family and its perturbations, and the larger codes
assembled from sign patterns, permutations, and finite-field rules.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .energy import PointConfig
from .errors import ParameterOutOfRange
from .gram import GramMatrix, realize_from_gram

__all__ = [
    "bisect_root",
    "simplex_unit_vectors",
    "build_simplex",
    "build_cross_polytope",
    "build_ngon",
    "build_c_n",
    "build_diplo_simplex",
    "perturb_diplo_simplex",
    "build_40_in_10",
    "build_40_in_10_competitor",
    "build_64_in_14_gram",
    "build_96_in_9",
]

ROOT_TOL = 1e-14


def bisect_root(f, lo: float, hi: float, tol: float = ROOT_TOL) -> float:
    """Root of f on [lo, hi] by bisection; f must change sign on the interval."""
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise ValueError("no sign change on the bracketing interval")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _complement_basis(v: np.ndarray) -> np.ndarray:
    # Columns form an orthonormal basis of the hyperplane orthogonal to the
    # unit vector v, built from the Householder map that exchanges v and e_1.
    k = v.shape[0]
    s = 1.0 if v[0] >= 0.0 else -1.0
    w = v.copy()
    w[0] += s
    h = np.eye(k) - np.outer(w, w) * (2.0 / (w @ w))
    return h[:, 1:]


def simplex_unit_vectors(k: int) -> np.ndarray:
    """k unit vectors in R^{k-1} with all pairwise inner products -1/(k-1).

    Returned as the rows of a (k, k-1) array.  k = 1 gives a single empty
    row, which is the right degenerate case for the block constructions
    below.
    """
    if k < 1:
        raise ValueError("need at least one vector")
    if k == 1:
        return np.zeros((1, 0))
    center = np.full(k, 1.0 / k)
    basis = _complement_basis(np.full(k, 1.0 / math.sqrt(k)))
    diffs = np.eye(k) - center
    rows = diffs @ basis
    rows /= math.sqrt(1.0 - 1.0 / k)
    return rows


def build_simplex(n: int) -> PointConfig:
    """Regular simplex: n+1 points in R^n."""
    return PointConfig.from_rows(simplex_unit_vectors(n + 1))


def build_cross_polytope(n: int) -> PointConfig:
    """Cross polytope: the 2n signed standard basis vectors."""
    eye = np.eye(n)
    return PointConfig.from_rows(np.vstack([eye, -eye]))


def build_ngon(N: int) -> PointConfig:
    """Regular N-gon on the unit circle."""
    if N < 2:
        raise ValueError("an N-gon needs at least 2 points")
    theta = 2.0 * np.pi * np.arange(N) / N
    return PointConfig.from_rows(np.column_stack([np.cos(theta), np.sin(theta)]))


def build_c_n(n: int) -> PointConfig:
    """Pole plus two parallel simplices: 2n+1 points in R^n.

    The common inner product alpha is the unique root in (0, 1/n) of

        (n^3 - 4n^2 + 4n) x^3 - n^2 x^2 - n x + 1 = 0,

    found by bisection.  The simplex nearer the pole sits at height alpha;
    the farther one is in dual position at the height that makes all
    non-paired inner products equal alpha.  For n = 2 this is the regular
    pentagon.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    c3 = float(n**3 - 4 * n**2 + 4 * n)
    c2 = float(n**2)
    c1 = float(n)

    def cubic(x: float) -> float:
        return ((c3 * x - c2) * x - c1) * x + 1.0

    # cubic(0) = 1 and cubic(1/n) = -4(n-1)/n^2 < 0, so the bracket is safe
    alpha = bisect_root(cubic, 0.0, 1.0 / n)
    simplex = simplex_unit_vectors(n)
    h = -math.sqrt((alpha * (n - 1) + 1.0) / n)
    rows = np.zeros((2 * n + 1, n))
    rows[0, n - 1] = 1.0
    rows[1 : n + 1, : n - 1] = math.sqrt(1.0 - alpha * alpha) * simplex
    rows[1 : n + 1, n - 1] = alpha
    rows[n + 1 :, : n - 1] = -math.sqrt(1.0 - h * h) * simplex
    rows[n + 1 :, n - 1] = h
    return PointConfig.from_rows(rows)


def _diplo_blocks(k: int, n: int, odd: bool):
    # Coordinate layout: v-simplex block, w-simplex block, then the shared
    # axis t, and for even n the extra axis z as the final coordinate.
    simplex = simplex_unit_vectors(k)
    d = k - 1
    v = np.zeros((k, n))
    w = np.zeros((k, n))
    v[:, :d] = simplex
    w[:, d : 2 * d] = simplex
    t = np.zeros(n)
    t[2 * d] = 1.0
    if odd:
        return v, w, t, None
    z = np.zeros(n)
    z[2 * d + 1] = 1.0
    return v, w, t, z


def build_diplo_simplex(n: int) -> PointConfig:
    """Simplex together with its antipode: 2n+2 points in R^n.

    Uses the facet-adapted coordinates built from two orthogonal simplices
    of half size.  n = 2 gives the hexagon and n = 3 the cube.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if n % 2 == 1:
        k = (n + 1) // 2
        v, w, t, _ = _diplo_blocks(k, n, odd=True)
        alpha = math.sqrt((2.0 * k - 2.0) / (2.0 * k - 1.0))
        lift = math.sqrt(1.0 - alpha * alpha)
        upper = np.vstack([alpha * v + lift * t, alpha * w + lift * t])
    else:
        k = n // 2
        v, w, t, z = _diplo_blocks(k, n, odd=False)
        alpha = math.sqrt((2.0 * k + 1.0) * (2.0 * k - 2.0)) / (2.0 * k)
        beta = 1.0 / (2.0 * k)
        lift = math.sqrt(1.0 - alpha * alpha - beta * beta)
        upper = np.vstack(
            [
                alpha * v + beta * z + lift * t,
                alpha * w - beta * z + lift * t,
            ]
        )
        rows = np.vstack([z[np.newaxis, :], -z[np.newaxis, :], upper, -upper])
        return PointConfig.from_rows(rows)
    return PointConfig.from_rows(np.vstack([upper, -upper]))


def _check_unit_interval(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ParameterOutOfRange(name, value, "[0, 1]")


def perturb_diplo_simplex(
    n: int, alpha: float, beta_or_gamma: float, beta: float | None = None
) -> PointConfig:
    """Antipodal simplex with one negated half rotated: 2n+2 points in R^n.

    For odd n the second argument is the rotation amount mixing the two
    simplex blocks of the negated half.  For even n it is the rotation
    gamma, and the optional third parameter overrides the z-coefficient
    beta (default: the unperturbed value 1/n); the combination must keep
    alpha^2 + 2 beta^2 at or above its unperturbed value, since shrinking
    it pushes the slanted points into the poles.  Zero rotation at the
    unperturbed alpha reproduces build_diplo_simplex exactly.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    _check_unit_interval("alpha", alpha)
    _check_unit_interval("beta_or_gamma", beta_or_gamma)
    if n % 2 == 1:
        if beta is not None:
            raise ValueError("odd dimensions take only alpha and a rotation")
        k = (n + 1) // 2
        v, w, t, _ = _diplo_blocks(k, n, odd=True)
        rot = beta_or_gamma
        co = math.sqrt(1.0 - rot * rot)
        lift = math.sqrt(1.0 - alpha * alpha)
        rows = np.vstack(
            [
                alpha * v + lift * t,
                alpha * w + lift * t,
                -(alpha * (co * v - rot * w) + lift * t),
                -(alpha * (rot * v + co * w) + lift * t),
            ]
        )
        return PointConfig.from_rows(rows)
    k = n // 2
    if k == 1 and alpha != 0.0:
        # no simplex directions exist in the plane, so alpha must vanish
        raise ParameterOutOfRange("alpha", alpha, "{0}")
    gamma = beta_or_gamma
    b = 1.0 / (2.0 * k) if beta is None else beta
    _check_unit_interval("beta", b)
    if alpha * alpha + b * b > 1.0:
        raise ParameterOutOfRange("alpha^2 + beta^2", alpha * alpha + b * b, "[0, 1]")
    floor = (2.0 * k - 1.0) / (2.0 * k)
    if alpha * alpha + 2.0 * b * b < floor - 1e-12:
        raise ParameterOutOfRange(
            "alpha^2 + 2 beta^2", alpha * alpha + 2.0 * b * b, f"[{floor}, inf)"
        )
    v, w, t, z = _diplo_blocks(k, n, odd=False)
    co = math.sqrt(1.0 - gamma * gamma)
    lift = math.sqrt(1.0 - alpha * alpha - b * b)
    rows = np.vstack(
        [
            z[np.newaxis, :],
            -z[np.newaxis, :],
            alpha * v + b * z + lift * t,
            alpha * w - b * z + lift * t,
            -(alpha * (co * v - gamma * w) + b * z + lift * t),
            -(alpha * (gamma * v + co * w) - b * z + lift * t),
        ]
    )
    return PointConfig.from_rows(rows)


_PAIRS_5 = tuple(itertools.combinations(range(5), 2))


def build_40_in_10() -> PointConfig:
    """40 points in R^10 from a parity rule on graphs over Z/5Z.

    Coordinates are indexed by the ten 2-element subsets of Z/5Z.  A point
    of type i is supported on the six subsets avoiding i, with entries
    +-1/sqrt(6); the minus entries form a graph on the remaining four
    residues, kept when the degrees at i+1 and i+2 match the edge count
    mod 2 while the degrees at i-1 and i-2 both differ from it.
    """
    column = {pair: idx for idx, pair in enumerate(_PAIRS_5)}
    scale = 1.0 / math.sqrt(6.0)
    rows = []
    for i in range(5):
        support = [pair for pair in _PAIRS_5 if i not in pair]
        for signs in itertools.product((1.0, -1.0), repeat=6):
            degree = dict.fromkeys((j for j in range(5) if j != i), 0)
            edges = 0
            for pair, s in zip(support, signs):
                if s < 0.0:
                    edges += 1
                    degree[pair[0]] += 1
                    degree[pair[1]] += 1
            e = edges % 2
            near = (degree[(i + 1) % 5] % 2, degree[(i + 2) % 5] % 2)
            far = (degree[(i - 1) % 5] % 2, degree[(i - 2) % 5] % 2)
            if near == (e, e) and far == (1 - e, 1 - e):
                row = np.zeros(10)
                for pair, s in zip(support, signs):
                    row[column[pair]] = s * scale
                rows.append(row)
    assert len(rows) == 40
    return PointConfig.from_rows(np.array(rows))


def build_40_in_10_competitor(alpha: float) -> PointConfig:
    """Competing 40-point family: a 4x4 tensor grid plus 24 lifted points.

    The grid is the tensor product of two regular tetrahedra inside a
    9-dimensional hyperplane.  Each permutation sigma of 4 letters yields
    one more point whose inner products with the grid are -3*alpha on the
    matched pairs and alpha elsewhere, lifted off the hyperplane with a
    sign given by the parity of sigma.  Requires 0 < alpha <= 1/sqrt(27)
    so the lift height is real.
    """
    if not 0.0 < alpha <= 1.0 / math.sqrt(27.0):
        raise ParameterOutOfRange("alpha", alpha, "(0, 1/sqrt(27)]")
    tetra = simplex_unit_vectors(4)
    grid = np.array([np.kron(tetra[i], tetra[j]) for i in range(4) for j in range(4)])
    rows = np.zeros((40, 10))
    rows[:16, :9] = grid
    height = math.sqrt(max(1.0 - 27.0 * alpha * alpha, 0.0))
    for m, sigma in enumerate(itertools.permutations(range(4))):
        b = np.full((4, 4), alpha)
        for i in range(4):
            b[i, sigma[i]] = -3.0 * alpha
        rows[16 + m, :9] = (9.0 / 16.0) * b.reshape(16) @ grid
        inversions = sum(
            1
            for i in range(4)
            for j in range(i + 1, 4)
            if sigma[i] > sigma[j]
        )
        rows[16 + m, 9] = height if inversions % 2 == 0 else -height
    return PointConfig.from_rows(rows)


# GF(8) as polynomials over GF(2) modulo x^3 + x + 1, elements as bit masks
_F8_MODULUS = 0b1011


def _f8_mul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        if a & 0b1000:
            a ^= _F8_MODULUS
        b >>= 1
    return r


def build_64_in_14_gram() -> PointConfig:
    """64 points in R^14 realized from a finite-field Gram rule.

    Points are indexed by pairs (x1, x2) of GF(8) elements.  Distinct
    pairs have inner product -1/7 when x1 = y1, otherwise -3/7 when
    x2 + y2 lies in {s^3, x1*y1*s} for s = x1 + y1, and 1/7 in the
    remaining cases.  The spectrum is 32/7 with multiplicity 14.
    """
    entries = np.empty((64, 64))
    for p in range(64):
        x1, x2 = divmod(p, 8)
        for q in range(64):
            y1, y2 = divmod(q, 8)
            if p == q:
                entries[p, q] = 1.0
            elif x1 == y1:
                entries[p, q] = -1.0 / 7.0
            else:
                s = x1 ^ y1
                targets = (_f8_mul(s, _f8_mul(s, s)), _f8_mul(_f8_mul(x1, y1), s))
                entries[p, q] = -3.0 / 7.0 if (x2 ^ y2) in targets else 1.0 / 7.0
    return realize_from_gram(GramMatrix(entries), 14)


_SIGN_LABELS = {
    (1, 1, -1, -1): 0,
    (-1, -1, 1, 1): 0,
    (1, -1, 1, -1): 1,
    (-1, 1, -1, 1): 1,
    (1, -1, -1, 1): 2,
    (-1, 1, 1, -1): 2,
}


def build_96_in_9() -> PointConfig:
    """96 points in R^9 built over three orthogonal tetrahedra.

    The twelve tetrahedron vectors v_i form a tight frame, so a point is
    recovered from its inner products c_i via x = (3/4) sum c_i v_i.  The
    24 points +-v_i are joined by the 72 points whose inner products are
    +-1/3 with two plus signs per tetrahedron, the three sign patterns
    labelled by Z/3Z with labels summing to zero.
    """
    tetra = simplex_unit_vectors(4)
    frame = np.zeros((12, 9))
    for block in range(3):
        frame[4 * block : 4 * block + 4, 3 * block : 3 * block + 3] = tetra
    rows = [frame, -frame]
    patterns = sorted(_SIGN_LABELS)
    triples = []
    for p1, p2, p3 in itertools.product(patterns, repeat=3):
        if (_SIGN_LABELS[p1] + _SIGN_LABELS[p2] + _SIGN_LABELS[p3]) % 3 == 0:
            triples.append(p1 + p2 + p3)
    coeffs = np.array(triples) / 3.0
    assert coeffs.shape == (72, 12)
    rows.append(0.75 * coeffs @ frame)
    return PointConfig.from_rows(np.vstack(rows))
