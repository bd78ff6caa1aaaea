"""Gram matrices: validation, spectral realization, and parametric families.

A configuration is often easiest to pin down through its matrix of
pairwise inner products.  `realize_from_gram` turns such a matrix back
into coordinates by spectral embedding, and the two module families
below (16 points in R^5, two rival 12-point families in R^4) are entered
as exact symbolic patterns evaluated at the caller's parameters.
"""

from __future__ import annotations

import numpy as np

from .energy import PointConfig
from .errors import NotPSD, ParameterOutOfRange, RankTooHigh

#: Eigenvalues below -PSD_TOL reject a Gram matrix; eigenvalues above
#: PSD_TOL count toward its rank.
PSD_TOL = 1e-9


class GramMatrix:
    """Symmetric matrix of inner products with unit diagonal.

    Symmetry is required within 1e-12 and the diagonal within 1e-12 of
    one; the stored matrix is exactly symmetrized with an exact unit
    diagonal, then frozen.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: np.ndarray):
        m = np.array(entries, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"Gram matrix must be square, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("Gram matrix has non-finite entries")
        if np.max(np.abs(m - m.T)) > 1e-12:
            raise ValueError("Gram matrix is not symmetric within 1e-12")
        if np.max(np.abs(np.diag(m) - 1.0)) > 1e-12:
            bad = int(np.argmax(np.abs(np.diag(m) - 1.0)))
            raise ValueError(f"diagonal entry {bad} is {m[bad, bad]!r}, not 1")
        m = 0.5 * (m + m.T)
        np.fill_diagonal(m, 1.0)
        m.flags.writeable = False
        self.entries = m

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    @staticmethod
    def from_config(config: PointConfig) -> "GramMatrix":
        g = config.points @ config.points.T
        np.fill_diagonal(g, 1.0)
        return GramMatrix(np.clip(0.5 * (g + g.T), -1.0, 1.0))

    def __repr__(self) -> str:
        return f"GramMatrix(size={self.size})"


def realize_from_gram(gram: GramMatrix, n: int) -> PointConfig:
    """Embed a Gram matrix as N unit points in R^n.

    Eigendecomposes, rejects matrices with an eigenvalue below -1e-9
    (NotPSD) or with more than n eigenvalues above 1e-9 (RankTooHigh),
    and builds coordinates from the top n scaled eigenvectors.  The
    output's Gram matrix reproduces the input within 1e-9 entrywise.
    """
    eigenvalues, eigenvectors = np.linalg.eigh(gram.entries)
    smallest = float(eigenvalues[0])
    if smallest < -PSD_TOL:
        raise NotPSD(smallest)
    rank = int(np.sum(eigenvalues > PSD_TOL))
    if rank > n:
        raise RankTooHigh(rank, n)
    keep = min(n, gram.size)
    top = eigenvalues[-keep:]
    rows = eigenvectors[:, -keep:] * np.sqrt(np.clip(top, 0.0, None))
    rows = rows[:, ::-1]
    if keep < n:
        rows = np.hstack([rows, np.zeros((gram.size, n - keep))])
    config = PointConfig.from_rows(rows)
    worst = float(np.max(np.abs(config.points @ config.points.T - gram.entries)))
    if worst > PSD_TOL:
        raise ArithmeticError(
            f"realized Gram deviates by {worst:.3e}, beyond the 1e-9 contract"
        )
    return config


def _pattern_to_gram(rows: list[str], symbols: dict[str, float]) -> GramMatrix:
    table = [[symbols[token] for token in row.split()] for row in rows]
    return GramMatrix(np.array(table))


# 16 points in R^5: one pole-like point, two triangles, and nine points
# in three triples.  Symbols: A = a^2.
_ROWS_16 = [
    "1 a a a a a a b b b b b b b b b",
    "a 1 e e A A A d c c c c d c d c",
    "a e 1 e A A A c d c d c c c c d",
    "a e e 1 A A A c c d c d c d c c",
    "a A A A 1 e e d c c c d c c c d",
    "a A A A e 1 e c d c c c d d c c",
    "a A A A e e 1 c c d d c c c d c",
    "b d c c d c c 1 f f f g g f g g",
    "b c d c c d c f 1 f g f g g f g",
    "b c c d c c d f f 1 g g f g g f",
    "b c d c c c d f g g 1 f f f g g",
    "b c c d d c c g f g f 1 f g f g",
    "b d c c c d c g g f f f 1 g g f",
    "b c c d c d c f g g f g g 1 f f",
    "b d c c c c d g f g g f g f 1 f",
    "b c d c d c c g g f g g f f f 1",
]


def build_gram_16_in_5(a: float, b: float) -> GramMatrix:
    """Two-parameter 16-point family in R^5.

    Derived entries: c = ab + (1/2) sqrt((1-a^2)(1-b^2)/2),
    d = ab - sqrt((1-a^2)(1-b^2)/2), e = (3a^2-1)/2, f = (3b^2-1)/2,
    g = (3b^2+1)/4.  At a = b = 0 the last fifteen rows degenerate to a
    rank-4 code on their own.
    """
    if not -1.0 < a < 1.0:
        raise ParameterOutOfRange("a", a, "(-1, 1)")
    if not -1.0 < b < 1.0:
        raise ParameterOutOfRange("b", b, "(-1, 1)")
    root = np.sqrt((1.0 - a * a) * (1.0 - b * b) / 2.0)
    symbols = {
        "1": 1.0,
        "a": a,
        "b": b,
        "A": a * a,
        "c": a * b + 0.5 * root,
        "d": a * b - root,
        "e": (3.0 * a * a - 1.0) / 2.0,
        "f": (3.0 * b * b - 1.0) / 2.0,
        "g": (3.0 * b * b + 1.0) / 4.0,
    }
    return _pattern_to_gram(_ROWS_16, symbols)


# 12 points in R^4, first family: four triangles.  Symbol m = -2a.
_ROWS_12A = [
    "1 c c d b b m a a m a a",
    "c 1 c b d b a m a a m a",
    "c c 1 b b d a a m a a m",
    "d b b 1 c c m a a m a a",
    "b d b c 1 c a m a a m a",
    "b b d c c 1 a a m a a m",
    "m a a m a a 1 c c d b b",
    "a m a a m a c 1 c b d b",
    "a a m a a m c c 1 b b d",
    "m a a m a a d b b 1 c c",
    "a m a a m a b d b c 1 c",
    "a a m a a m b b d c c 1",
]


def build_gram_12_in_4_family1(a: float) -> GramMatrix:
    """First 12-point family in R^4, for 0 < a < 1/2.

    Derived entries b = a - 1, c = -3a + 1, d = 4a - 1.  Nonzero
    eigenvalues are 12a and 6 - 12a, each with multiplicity 2; both are
    positive on the open interval, so the matrix realizes in R^4.
    """
    if not 0.0 < a < 0.5:
        raise ParameterOutOfRange("a", a, "(0, 1/2)")
    symbols = {
        "1": 1.0,
        "a": a,
        "b": a - 1.0,
        "c": -3.0 * a + 1.0,
        "d": 4.0 * a - 1.0,
        "m": -2.0 * a,
    }
    return _pattern_to_gram(_ROWS_12A, symbols)


# 12 points in R^4, second family: a distinguished tetrahedron plus two
# parallel tetrahedra.  Symbols: t = -1/3, m = -3a.
_ROWS_12B = [
    "1 t t t m a a a m a a a",
    "t 1 t t a m a a a m a a",
    "t t 1 t a a m a a a m a",
    "t t t 1 a a a m a a a m",
    "m a a a 1 b b b d c c c",
    "a m a a b 1 b b c d c c",
    "a a m a b b 1 b c c d c",
    "a a a m b b b 1 c c c d",
    "m a a a d c c c 1 b b b",
    "a m a a c d c c b 1 b b",
    "a a m a c c d c b b 1 b",
    "a a a m c c c d b b b 1",
]


def build_gram_12_in_4_family2(a: float) -> GramMatrix:
    """Second 12-point family in R^4, for 0 < a < 1/3.

    Derived entries b = 1 - 12a^2, c = 6a^2 - 1, d = 18a^2 - 1.
    Nonzero eigenvalues are 4/3 + 24a^2 (multiplicity 3) and 8 - 72a^2.
    At a = 1/4 the maximal inner product is 1/4.
    """
    if not 0.0 < a < 1.0 / 3.0:
        raise ParameterOutOfRange("a", a, "(0, 1/3)")
    symbols = {
        "1": 1.0,
        "t": -1.0 / 3.0,
        "a": a,
        "m": -3.0 * a,
        "b": 1.0 - 12.0 * a * a,
        "c": 6.0 * a * a - 1.0,
        "d": 18.0 * a * a - 1.0,
    }
    return _pattern_to_gram(_ROWS_12B, symbols)
