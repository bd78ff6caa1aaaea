"""Automorphism groups of point configurations.

A combinatorial automorphism is a permutation of the points preserving
all pairwise inner products.  The search works on the complete graph
whose edges are colored by inner-product class: vertex colors are
refined to a stable partition, then images of a spanning base are chosen
one at a time with full constraint propagation and backtracking.  Orbit
sizes along the resulting stabilizer chain multiply to the exact group
order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .energy import PointConfig
from .errors import AmbiguousClustering, NotAnAutomorphism, SpanDeficient

__all__ = [
    "SymmetryReport",
    "RealizedAutomorphism",
    "automorphism_group",
    "realize_automorphism",
]

EDGE_TOL = 1e-9
REALIZE_TOL = 1e-8


def _edge_color_matrix(gram: np.ndarray, tol: float) -> np.ndarray:
    """Color each unordered pair by its inner-product class.

    Classes come from gap-splitting the sorted off-diagonal values at the
    absolute tolerance.  Class representatives closer than ten times the
    tolerance mean the clustering is unreliable, which is fatal here
    because wrong colors would produce a wrong group.
    """
    N = len(gram)
    entries = sorted(
        (gram[i, j], i, j) for i in range(N) for j in range(i + 1, N)
    )
    C = np.zeros((N, N), dtype=np.int64)
    np.fill_diagonal(C, -1)
    color = 0
    reps = []
    chunk = []
    for idx, (v, i, j) in enumerate(entries):
        chunk.append((v, i, j))
        last = idx == len(entries) - 1
        if last or entries[idx + 1][0] - v > tol:
            for w, a, b in chunk:
                C[a, b] = C[b, a] = color
            reps.append(float(np.mean([w for w, _, _ in chunk])))
            color += 1
            chunk = []
    for a, b in zip(reps, reps[1:]):
        if b - a < 10.0 * tol:
            raise AmbiguousClustering(a, b, tol)
    return C


def _refine_vertex_colors(C: np.ndarray) -> np.ndarray:
    """Stable vertex coloring under edge-color neighborhood signatures."""
    N = len(C)
    colors = np.zeros(N, dtype=np.int64)
    while True:
        sigs = []
        for v in range(N):
            pairs = sorted(
                (int(C[v, u]), int(colors[u])) for u in range(N) if u != v
            )
            sigs.append((int(colors[v]), tuple(pairs)))
        lookup = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = np.array([lookup[s] for s in sigs], dtype=np.int64)
        if np.array_equal(new, colors):
            return colors
        colors = new


def _settle(
    C: np.ndarray,
    mapping: np.ndarray,
    cand: np.ndarray,
    pending: list[tuple[int, int]],
) -> bool:
    """Apply queued assignments and unit-propagate to a fixpoint."""
    N = len(C)
    while True:
        while pending:
            v, u = pending.pop()
            if mapping[v] == u:
                continue
            if mapping[v] != -1 or not cand[v, u]:
                return False
            mapping[v] = u
            cand[v, :] = False
            cand[:, u] = False
            cand[v, u] = True
            unm = mapping == -1
            if unm.any():
                cand[unm] = cand[unm] & (C[u][None, :] == C[v][unm][:, None])
        unm = mapping == -1
        if not unm.any():
            return True
        counts = cand.sum(axis=1)
        if (counts[unm] == 0).any():
            return False
        open_cols = np.ones(N, dtype=bool)
        open_cols[mapping[~unm]] = False
        if (cand[:, open_cols].sum(axis=0) == 0).any():
            return False
        units = np.flatnonzero(unm & (counts == 1))
        if units.size == 0:
            return True
        for v in units:
            pending.append((int(v), int(np.flatnonzero(cand[v])[0])))


def _dfs(C: np.ndarray, mapping: np.ndarray, cand: np.ndarray):
    unmapped = np.flatnonzero(mapping == -1)
    if unmapped.size == 0:
        return tuple(int(t) for t in mapping)
    counts = cand[unmapped].sum(axis=1)
    v = int(unmapped[np.argmin(counts)])
    for u in np.flatnonzero(cand[v]):
        m = mapping.copy()
        c = cand.copy()
        if _settle(C, m, c, [(v, int(u))]):
            found = _dfs(C, m, c)
            if found is not None:
                return found
    return None


def _search_map(
    C: np.ndarray, static: np.ndarray, forced: list[tuple[int, int]]
):
    """First automorphism consistent with the forced pairs, or None."""
    N = len(C)
    mapping = np.full(N, -1, dtype=np.int64)
    cand = static[:, None] == static[None, :]
    if not _settle(C, mapping, cand, list(forced)):
        return None
    return _dfs(C, mapping, cand)


def _spanning_base(points: np.ndarray) -> list[int]:
    """Greedy prefix of vertex indices whose points span the point span.

    Fixing the images of a spanning set pins down the image of every
    other point, so the pointwise stabilizer of this base is trivial.
    """
    base: list[int] = []
    rows: list[np.ndarray] = []
    rank = 0
    for i, p in enumerate(points):
        trial = np.array(rows + [p])
        sv = np.linalg.svd(trial, compute_uv=False)
        if (sv > 1e-9 * sv[0]).sum() > rank:
            base.append(i)
            rows.append(p)
            rank += 1
    return base


def _orbit(start: int, generators: list[tuple[int, ...]], N: int) -> set[int]:
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for g in generators:
            w = g[v]
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen


def _point_orbits(
    generators: tuple[tuple[int, ...], ...], N: int
) -> tuple[tuple[int, ...], ...]:
    parent = list(range(N))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in generators:
        for i, j in enumerate(g):
            parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(N):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(v) for v in sorted(groups.values()))


@dataclass(frozen=True)
class RealizedAutomorphism:
    """Orthogonal matrix inducing a point permutation, with its determinant."""

    matrix: np.ndarray
    determinant: int


@dataclass(frozen=True)
class SymmetryReport:
    """Automorphism group of a configuration."""

    order: int
    generators: tuple[tuple[int, ...], ...]
    chiral: bool | None
    orbits: tuple[tuple[int, ...], ...]
    base: tuple[int, ...] = field(default=())


def _span_rank(points: np.ndarray) -> int:
    sv = np.linalg.svd(points, compute_uv=False)
    return int((sv > 1e-9 * sv[0]).sum())


def realize_automorphism(
    config: PointConfig, perm, tol: float = REALIZE_TOL
) -> RealizedAutomorphism:
    """Least-squares orthogonal matrix carrying each point to its image.

    The permutation must preserve the Gram matrix; the configuration must
    span the ambient space, otherwise the realization is not unique.
    """
    x = config.points
    N, n = x.shape
    p = list(int(v) for v in perm)
    if sorted(p) != list(range(N)):
        raise ValueError("not a permutation of the point indices")
    gram = x @ x.T
    err = float(np.abs(gram[np.ix_(p, p)] - gram).max())
    if err > tol:
        raise NotAnAutomorphism(
            f"permutation changes the Gram matrix by {err:.3e}"
        )
    rank = _span_rank(x)
    if rank < n:
        raise SpanDeficient(rank, n)
    target = x[p]
    u, _, vt = np.linalg.svd(x.T @ target)
    q = (u @ vt).T
    residual = float(np.linalg.norm(x @ q.T - target, axis=1).max())
    if residual > tol:
        raise NotAnAutomorphism(
            f"no orthogonal realization within {tol:.1e} (residual {residual:.3e})"
        )
    return RealizedAutomorphism(
        matrix=q, determinant=int(round(np.linalg.det(q)))
    )


def automorphism_group(
    config: PointConfig, tol: float = EDGE_TOL
) -> SymmetryReport:
    """Generators, exact order, chirality, and orbits of the symmetry group.

    Builds a stabilizer chain along a spanning base: at each level the
    search finds, for every reachable image of the base point, one
    automorphism fixing the earlier base points.  The orbit sizes then
    multiply to the group order.  Chirality holds when every generator
    realizes with determinant +1; it is undefined for span-deficient
    input.
    """
    x = config.points
    N = len(x)
    gram = x @ x.T
    C = _edge_color_matrix(gram, tol)
    static = _refine_vertex_colors(C)
    base = _spanning_base(x)
    generators: list[tuple[int, ...]] = []
    order = 1
    for level, b in enumerate(base):
        fixed = base[:level]
        level_gens = [g for g in generators if all(g[f] == f for f in fixed)]
        orb = _orbit(b, level_gens, N)
        for u in range(N):
            if u in orb or static[u] != static[b]:
                continue
            if any(C[f, u] != C[f, b] for f in fixed):
                continue
            forced = [(f, f) for f in fixed] + [(b, u)]
            g = _search_map(C, static, forced)
            if g is not None:
                generators.append(g)
                level_gens.append(g)
                orb = _orbit(b, level_gens, N)
        order *= len(orb)
    gens = tuple(generators)
    if _span_rank(x) < config.n:
        chiral = None
    else:
        chiral = all(
            realize_automorphism(config, g).determinant == 1 for g in gens
        )
    return SymmetryReport(
        order=order,
        generators=gens,
        chiral=chiral,
        orbits=_point_orbits(gens, N),
        base=tuple(base),
    )
