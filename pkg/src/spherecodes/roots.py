"""Root systems, regular polytopes, and graph-derived Gram matrices.

The E-series configurations are obtained by filtering the 240 roots of E8
against fixed reference roots and projecting, so no separate lattice
machinery is needed.  The 600-cell is generated as a finite quaternion
group and then conjugated so that one of its order-10 elements acts by
simultaneous complex rotation of the two coordinate planes; that makes
the standard fibration of the 3-sphere respect the vertex set.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

__all__ = [
    "e8_roots",
    "e7_roots",
    "e7_dual_minimal",
    "e6_roots",
    "e6_dual_minimal",
    "schlaefli_vectors",
    "complement_coordinates",
    "icosahedron_vertices",
    "dodecahedron_vertices",
    "cell24_vertices",
    "cell600_vertices",
    "hoffman_singleton_adjacency",
    "hs_second_subconstituent_gram",
]

GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0

# reference roots used to cut E7 and E6 out of E8
_E7_AXIS = np.array([1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])
_E6_AXIS = np.array([0.0, -1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0])


def e8_roots() -> np.ndarray:
    """The 240 roots of E8, squared norm 2, as rows."""
    rows = []
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((1.0, -1.0), repeat=2):
            r = np.zeros(8)
            r[i] = si
            r[j] = sj
            rows.append(r)
    for signs in itertools.product((0.5, -0.5), repeat=8):
        if sum(s < 0 for s in signs) % 2 == 0:
            rows.append(np.array(signs))
    out = np.array(rows)
    assert out.shape == (240, 8)
    return out


def _dot(rows: np.ndarray, v: np.ndarray) -> np.ndarray:
    return rows @ v


def e7_roots() -> np.ndarray:
    """The 126 roots of E8 orthogonal to the fixed E7 axis."""
    roots = e8_roots()
    return roots[np.abs(_dot(roots, _E7_AXIS)) < 1e-12]


def e7_dual_minimal() -> np.ndarray:
    """The 56 minimal vectors of the dual, squared norm 3/2, in R^8 coordinates.

    Projecting the roots with inner product +-1 against the axis onto the
    orthogonal hyperplane identifies them in pairs, leaving 56 distinct
    vectors.
    """
    roots = e8_roots()
    c = _dot(roots, _E7_AXIS)
    chosen = roots[np.abs(c - 1.0) < 1e-12]
    # x and (axis - x) project to opposite vectors, so this set is already
    # closed under negation
    return chosen - 0.5 * _E7_AXIS


def e6_roots() -> np.ndarray:
    """The 72 roots of E8 orthogonal to both reference roots."""
    roots = e8_roots()
    mask = (np.abs(_dot(roots, _E7_AXIS)) < 1e-12) & (
        np.abs(_dot(roots, _E6_AXIS)) < 1e-12
    )
    return roots[mask]


def e6_dual_minimal() -> np.ndarray:
    """The 54 minimal dual vectors, squared norm 4/3, in R^8 coordinates."""
    roots = e7_roots()
    c = _dot(roots, _E6_AXIS)
    out = []
    for sign in (1.0, -1.0):
        chosen = roots[np.abs(c - sign) < 1e-12]
        # subtracting (c/3) alpha + (2c/3) beta kills both components
        out.append(chosen - (sign / 3.0) * _E7_AXIS - (2.0 * sign / 3.0) * _E6_AXIS)
    return np.vstack(out)


def schlaefli_vectors() -> np.ndarray:
    """The 27 unit vectors with pairwise inner products 1/4 and -1/2.

    One sign class of the minimal dual vectors, normalized; each vector
    has 16 neighbors at 1/4 and 10 at -1/2.
    """
    roots = e7_roots()
    c = _dot(roots, _E6_AXIS)
    chosen = roots[np.abs(c - 1.0) < 1e-12]
    proj = chosen - (1.0 / 3.0) * _E7_AXIS - (2.0 / 3.0) * _E6_AXIS
    out = e6_coordinates(proj) / math.sqrt(4.0 / 3.0)
    assert out.shape == (27, 6)
    return out


def complement_coordinates(rows: np.ndarray, axes: np.ndarray) -> np.ndarray:
    """Coordinates of rows in an orthonormal basis of the complement of axes.

    Every row must already be orthogonal to the spanned axes; the result
    just expresses them in the lower dimension.
    """
    axes = np.atleast_2d(axes)
    _, _, vt = np.linalg.svd(axes)
    basis = vt[axes.shape[0] :].T
    coords = rows @ basis
    back = coords @ basis.T
    if np.abs(back - rows).max() > 1e-9:
        raise ValueError("rows are not orthogonal to the removed axes")
    return coords


def e7_coordinates(rows: np.ndarray) -> np.ndarray:
    return complement_coordinates(rows, _E7_AXIS)


def e6_coordinates(rows: np.ndarray) -> np.ndarray:
    return complement_coordinates(rows, np.vstack([_E7_AXIS, _E6_AXIS]))


def icosahedron_vertices() -> np.ndarray:
    """The 12 unit vertices of the regular icosahedron."""
    rows = []
    scale = 1.0 / math.sqrt(1.0 + GOLDEN * GOLDEN)
    for s1, s2 in itertools.product((1.0, -1.0), repeat=2):
        base = (0.0, s1, s2 * GOLDEN)
        for shift in range(3):
            rows.append([base[(k - shift) % 3] for k in range(3)])
    return np.array(rows) * scale


def dodecahedron_vertices() -> np.ndarray:
    """The 20 unit vertices of the dodecahedron dual to icosahedron_vertices.

    Built as the normalized face centers of the icosahedron, so the two
    polytopes are in genuine dual position and their union is the
    32-point configuration.
    """
    ico = icosahedron_vertices()
    gram = ico @ ico.T
    edge = gram[~np.eye(12, dtype=bool)].max()
    centers = []
    for i, j, k in itertools.combinations(range(12), 3):
        if (
            abs(gram[i, j] - edge) < 1e-9
            and abs(gram[i, k] - edge) < 1e-9
            and abs(gram[j, k] - edge) < 1e-9
        ):
            s = ico[i] + ico[j] + ico[k]
            centers.append(s / np.linalg.norm(s))
    out = np.array(centers)
    assert out.shape == (20, 3)
    return out


def cell24_vertices() -> np.ndarray:
    """The 24 unit vertices of the 24-cell (all signed coordinate pairs)."""
    rows = []
    for i, j in itertools.combinations(range(4), 2):
        for si, sj in itertools.product((1.0, -1.0), repeat=2):
            r = np.zeros(4)
            r[i] = si
            r[j] = sj
            rows.append(r)
    return np.array(rows) / math.sqrt(2.0)


def cell24_dual_vertices() -> np.ndarray:
    """The dual 24-cell: signed basis vectors and half-integer points."""
    rows = [row for row in np.eye(4)] + [row for row in -np.eye(4)]
    for signs in itertools.product((0.5, -0.5), repeat=4):
        rows.append(np.array(signs))
    return np.array(rows)


def _quat_mul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return np.array(
        [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ]
    )


def _quat_conj(q: np.ndarray) -> np.ndarray:
    return np.array([q[0], -q[1], -q[2], -q[3]])


def _close_group(generators: list[np.ndarray], expect: int) -> np.ndarray:
    def key(q: np.ndarray) -> tuple:
        return tuple(np.round(q, 10))

    elements: dict[tuple, np.ndarray] = {}
    queue = [np.array([1.0, 0.0, 0.0, 0.0])]
    elements[key(queue[0])] = queue[0]
    while queue:
        current = queue.pop()
        for g in generators:
            candidate = _quat_mul(current, g)
            k = key(candidate)
            if k not in elements:
                elements[k] = candidate
                queue.append(candidate)
        if len(elements) > expect:
            raise ArithmeticError("group closure exceeded the expected order")
    out = np.array(sorted(elements.values(), key=key))
    if len(out) != expect:
        raise ArithmeticError(f"group closure gave {len(out)} elements, not {expect}")
    return out


def cell600_vertices() -> np.ndarray:
    """The 120 unit vertices of the 600-cell, adapted to the standard fibration.

    The vertices form a group of unit quaternions.  The whole set is
    conjugated so that a chosen order-10 element becomes the complex
    number cos(pi/5) + i sin(pi/5); left multiplication by that element
    then rotates the (x0, x1) and (x2, x3) planes simultaneously, so the
    vertex set splits into 12 fibers of 10.
    """
    half = np.array([0.5, 0.5, 0.5, 0.5])
    golden = np.array([GOLDEN, 1.0, 1.0 / GOLDEN, 0.0]) / 2.0
    group = _close_group([half, golden], 120)

    target = math.cos(math.pi / 5.0)
    order10 = None
    for q in group:
        if abs(q[0] - target) < 1e-9:
            order10 = q
            break
    assert order10 is not None
    axis = order10[1:] / np.linalg.norm(order10[1:])

    # rotate the imaginary axis of the order-10 element onto i: a half-turn
    # about the bisector does it, with a fallback when the two are opposite
    bisector = axis + np.array([1.0, 0.0, 0.0])
    norm = np.linalg.norm(bisector)
    if norm < 1e-9:
        s = np.array([0.0, 0.0, 1.0, 0.0])
    else:
        s = np.concatenate([[0.0], bisector / norm])
    s_inv = _quat_conj(s)
    rotated = np.array([_quat_mul(_quat_mul(s, q), s_inv) for q in group])

    probe = None
    for q in rotated:
        if abs(q[0] - target) < 1e-9 and abs(q[1] - math.sin(math.pi / 5.0)) < 1e-9:
            if max(abs(q[2]), abs(q[3])) < 1e-9:
                probe = q
                break
    assert probe is not None
    return rotated


def hoffman_singleton_adjacency() -> np.ndarray:
    """Adjacency matrix of the Hoffman-Singleton graph on 50 vertices.

    Five pentagons P_h and five pentagrams Q_i on vertex set Z/5Z, with
    vertex j of P_h joined to vertex h*i + j of Q_i.  Vertices are indexed
    pentagon-major: P_h vertex j at 5h + j, Q_i vertex k at 25 + 5i + k.
    """
    a = np.zeros((50, 50), dtype=np.int64)

    def p(h: int, j: int) -> int:
        return 5 * h + j % 5

    def q(i: int, k: int) -> int:
        return 25 + 5 * i + k % 5

    for h in range(5):
        for j in range(5):
            a[p(h, j), p(h, j + 1)] = a[p(h, j + 1), p(h, j)] = 1
    for i in range(5):
        for k in range(5):
            a[q(i, k), q(i, k + 2)] = a[q(i, k + 2), q(i, k)] = 1
    for h in range(5):
        for i in range(5):
            for j in range(5):
                a[p(h, j), q(i, h * i + j)] = a[q(i, h * i + j), p(h, j)] = 1

    degrees = a.sum(axis=1)
    assert degrees.min() == degrees.max() == 7
    square = a @ a
    offdiag = square - np.diag(np.diag(square))
    # strong regularity: adjacent pairs share 0 neighbors, others share 1
    assert np.all(offdiag[a == 1] == 0)
    mask = (a == 0) & ~np.eye(50, dtype=bool)
    assert np.all(offdiag[mask] == 1)
    return a


def hs_second_subconstituent_gram() -> np.ndarray:
    """Gram matrix of 42 unit vectors from the Hoffman-Singleton graph.

    Take the 42 vertices at distance two from a fixed vertex.  Adjacent
    pairs get inner product -1/2.  A non-adjacent pair has exactly one
    common neighbor in the whole graph; the product is -1/5 when that
    neighbor lies outside the subconstituent and 1/10 when inside.
    """
    a = hoffman_singleton_adjacency()
    base = 0
    neighbors = np.flatnonzero(a[base])
    rest = [v for v in range(50) if v != base and v not in set(neighbors)]
    assert len(rest) == 42
    sub = a[np.ix_(rest, rest)]
    inside = sub @ sub
    g = np.empty((42, 42))
    for x in range(42):
        for y in range(42):
            if x == y:
                g[x, y] = 1.0
            elif sub[x, y] == 1:
                g[x, y] = -0.5
            elif inside[x, y] == 1:
                g[x, y] = 0.1
            else:
                g[x, y] = -0.2
    return g
