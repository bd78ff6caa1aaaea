"""Pair energies, Riemannian gradients, and Hessian spectra on product spheres.

A configuration is N unit points in R^n.  Its energy under a potential f is
the sum of f(squared distance) over unordered pairs.  Squared distances lie
in (0, 4], so potentials are defined on that interval only.  The gradient
and Hessian are taken on the product manifold of N copies of the unit
sphere: ambient derivatives are projected to the tangent spaces, and the
Hessian picks up the usual spherical curvature correction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import CoincidentPoints

__all__ = [
    "PointConfig",
    "InversePower",
    "Harmonic",
    "TruncatedPower",
    "Logarithmic",
    "Potential",
    "TangentVector",
    "HessianSpectrum",
    "energy",
    "pair_squared_distances",
    "riemannian_gradient",
    "riemannian_hessian_spectrum",
    "tangent_frames",
    "tangent_hessian",
]

UNIT_NORM_TOL = 1e-12
COINCIDENCE_TOL = 1e-14
ZERO_EIGENVALUE_TOL = 1e-8


class PointConfig:
    """N unit points in R^n, stored as the rows of an (N, n) array.

    The array is validated on construction (finite entries, unit rows within
    1e-12) and then frozen, so a config can be shared freely.
    """

    __slots__ = ("points",)

    def __init__(self, points: np.ndarray):
        pts = np.array(points, dtype=float, order="C")
        if pts.ndim != 2:
            raise ValueError(f"points must be a 2-d array, got shape {pts.shape}")
        if pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValueError(f"need at least one point in at least one dimension, got {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("points contain non-finite entries")
        norms = np.linalg.norm(pts, axis=1)
        worst = float(np.max(np.abs(norms - 1.0)))
        if worst > UNIT_NORM_TOL:
            bad = int(np.argmax(np.abs(norms - 1.0)))
            raise ValueError(
                f"point {bad} has norm {norms[bad]!r}; unit norm required within {UNIT_NORM_TOL}"
            )
        pts.flags.writeable = False
        self.points = pts

    @property
    def N(self) -> int:
        return self.points.shape[0]

    @property
    def n(self) -> int:
        return self.points.shape[1]

    def __repr__(self) -> str:
        return f"PointConfig(N={self.N}, n={self.n})"

    @staticmethod
    def from_rows(rows, n: int | None = None) -> "PointConfig":
        """Build a config from row vectors, renormalizing each to unit length.

        Rows already unit to machine precision are kept bit for bit, so a
        formatted config parses back without last-ulp churn.
        """
        pts = np.atleast_2d(np.asarray(rows, dtype=float))
        norms = np.linalg.norm(pts, axis=1, keepdims=True)
        off = np.abs(norms - 1.0) > 8e-16
        if np.any(off):
            pts = np.where(off, pts / norms, pts)
        return PointConfig(pts)


@dataclass(frozen=True)
class InversePower:
    """f(r) = 1 / r^s for a fixed exponent s > 0."""

    exponent: float

    def __post_init__(self):
        if not self.exponent > 0:
            raise ValueError(f"exponent must be positive, got {self.exponent}")

    def value(self, r: np.ndarray, n: int) -> np.ndarray:
        return r ** (-self.exponent)

    def deriv(self, r: np.ndarray, n: int) -> np.ndarray:
        s = self.exponent
        return -s * r ** (-s - 1.0)

    def deriv2(self, r: np.ndarray, n: int) -> np.ndarray:
        s = self.exponent
        return s * (s + 1.0) * r ** (-s - 2.0)

    def singular_at_zero(self, n: int) -> bool:
        return True

    def magnitude_scale(self, n: int) -> float:
        return 1.0


@dataclass(frozen=True)
class Harmonic:
    """f(r) = 1 / r^(n/2 - 1); the exponent is fixed by the ambient dimension.

    In R^2 the exponent degenerates to zero and the potential is constant.
    """

    def _exponent(self, n: int) -> float:
        return 0.5 * n - 1.0

    def value(self, r: np.ndarray, n: int) -> np.ndarray:
        s = self._exponent(n)
        if s == 0.0:
            return np.ones_like(r)
        return r ** (-s)

    def deriv(self, r: np.ndarray, n: int) -> np.ndarray:
        s = self._exponent(n)
        if s == 0.0:
            return np.zeros_like(r)
        return -s * r ** (-s - 1.0)

    def deriv2(self, r: np.ndarray, n: int) -> np.ndarray:
        s = self._exponent(n)
        if s == 0.0:
            return np.zeros_like(r)
        return s * (s + 1.0) * r ** (-s - 2.0)

    def singular_at_zero(self, n: int) -> bool:
        return n > 2

    def magnitude_scale(self, n: int) -> float:
        return 1.0


@dataclass(frozen=True)
class TruncatedPower:
    """f(r) = (4 - r)^k for an integer degree k >= 1.

    Finite at r = 0, so coincident points are allowed; it vanishes for
    antipodal pairs.  Values grow like 4^k, which matters when choosing
    tolerances: magnitude_scale reports that factor.
    """

    degree: int

    def __post_init__(self):
        if self.degree < 1 or self.degree != int(self.degree):
            raise ValueError(f"degree must be a positive integer, got {self.degree}")

    def value(self, r: np.ndarray, n: int) -> np.ndarray:
        return (4.0 - r) ** self.degree

    def deriv(self, r: np.ndarray, n: int) -> np.ndarray:
        k = self.degree
        return -k * (4.0 - r) ** (k - 1)

    def deriv2(self, r: np.ndarray, n: int) -> np.ndarray:
        k = self.degree
        if k == 1:
            return np.zeros_like(r)
        return k * (k - 1) * (4.0 - r) ** (k - 2)

    def singular_at_zero(self, n: int) -> bool:
        return False

    def magnitude_scale(self, n: int) -> float:
        return 4.0**self.degree


@dataclass(frozen=True)
class Logarithmic:
    """f(r) = -log r."""

    def value(self, r: np.ndarray, n: int) -> np.ndarray:
        return -np.log(r)

    def deriv(self, r: np.ndarray, n: int) -> np.ndarray:
        return -1.0 / r

    def deriv2(self, r: np.ndarray, n: int) -> np.ndarray:
        return 1.0 / (r * r)

    def singular_at_zero(self, n: int) -> bool:
        return True

    def magnitude_scale(self, n: int) -> float:
        return 1.0


Potential = Union[InversePower, Harmonic, TruncatedPower, Logarithmic]


class TangentVector:
    """A displacement field along a config, one vector per point.

    Each displacement is orthogonal to its base point (checked on
    construction, relative to the displacement magnitude).
    """

    __slots__ = ("config", "vectors")

    def __init__(self, config: PointConfig, vectors: np.ndarray):
        vecs = np.array(vectors, dtype=float)
        if vecs.shape != config.points.shape:
            raise ValueError(f"vectors shape {vecs.shape} does not match config {config.points.shape}")
        radial = np.abs(np.sum(vecs * config.points, axis=1))
        scale = np.maximum(1.0, np.linalg.norm(vecs, axis=1))
        if np.any(radial > 1e-10 * scale):
            bad = int(np.argmax(radial / scale))
            raise ValueError(f"displacement {bad} is not tangent (radial part {radial[bad]:.3e})")
        vecs.flags.writeable = False
        self.config = config
        self.vectors = vecs

    def sup_norm(self) -> float:
        """Largest absolute entry over all displacements."""
        return float(np.max(np.abs(self.vectors))) if self.vectors.size else 0.0

    def norm(self) -> float:
        return float(np.linalg.norm(self.vectors))


@dataclass(frozen=True)
class HessianSpectrum:
    """Sorted eigenvalues of the tangent-space Hessian, with a zero count.

    There are (n-1)N eigenvalues.  zero_count uses the absolute threshold
    1e-8; rotations of the whole sphere always contribute zeros at a
    critical configuration.
    """

    eigenvalues: np.ndarray
    zero_count: int

    @property
    def min_eigenvalue(self) -> float:
        return float(self.eigenvalues[0])

    def is_minimum(self, tol: float = ZERO_EIGENVALUE_TOL) -> bool:
        """True when no eigenvalue is decisively negative."""
        return bool(self.eigenvalues[0] >= -tol)


def pair_squared_distances(config: PointConfig) -> np.ndarray:
    """Full N x N matrix of squared Euclidean distances (zero diagonal)."""
    x = config.points
    d = x[:, None, :] - x[None, :, :]
    return np.einsum("ijk,ijk->ij", d, d)


def _check_coincidence(r: np.ndarray, potential: Potential, n: int) -> None:
    if not potential.singular_at_zero(n):
        return
    mask = ~np.eye(r.shape[0], dtype=bool)
    masked = np.where(mask, r, np.inf)
    if np.min(masked) <= COINCIDENCE_TOL:
        i, j = np.unravel_index(int(np.argmin(masked)), r.shape)
        raise CoincidentPoints(int(i), int(j), float(r[i, j]))


def energy(config: PointConfig, potential: Potential) -> float:
    """Total pair energy, summed over pairs in lexicographic index order.

    Identical inputs give bit-identical results: the pair order and the
    reduction are fixed.
    """
    r = pair_squared_distances(config)
    _check_coincidence(r, potential, config.n)
    iu, ju = np.triu_indices(config.N, k=1)
    return float(np.sum(potential.value(r[iu, ju], config.n)))


def riemannian_gradient(config: PointConfig, potential: Potential) -> TangentVector:
    """Gradient of the energy, projected to the product of tangent spaces.

    The ambient gradient at point i is sum over j of 2 f'(r_ij) (x_i - x_j);
    subtracting its radial part gives the Riemannian gradient.
    """
    x = config.points
    r = pair_squared_distances(config)
    _check_coincidence(r, potential, config.n)
    np.fill_diagonal(r, 1.0)
    w = potential.deriv(r, config.n)
    np.fill_diagonal(w, 0.0)
    d = x[:, None, :] - x[None, :, :]
    grad = 2.0 * np.einsum("ij,ijk->ik", w, d)
    radial = np.sum(grad * x, axis=1, keepdims=True)
    return TangentVector(config, grad - radial * x)


def tangent_frames(config: PointConfig) -> np.ndarray:
    """Orthonormal tangent bases, one (n, n-1) frame per point.

    Frame i spans the orthogonal complement of x_i, taken from the
    Householder reflection that sends x_i to a signed first basis vector.
    The construction is deterministic in the coordinates.
    """
    x = config.points
    N, n = x.shape
    frames = np.empty((N, n, n - 1))
    for i in range(N):
        v = x[i].copy()
        sign = 1.0 if v[0] >= 0 else -1.0
        v[0] += sign
        h = np.eye(n) - (2.0 / np.dot(v, v)) * np.outer(v, v)
        frames[i] = h[:, 1:]
    return frames


def tangent_hessian(config: PointConfig, potential: Potential) -> tuple[np.ndarray, np.ndarray]:
    """Dense Hessian of the energy in per-point tangent frames.

    Returns (H, frames) where H has shape ((n-1)N, (n-1)N) and is expressed
    in the orthonormal frames from tangent_frames.  Each diagonal block
    carries the curvature correction -lambda_i I with lambda_i the radial
    component of the ambient gradient at x_i: that is the standard Hessian
    of the restriction to the product of unit spheres.
    """
    x = config.points
    N, n = x.shape
    r = pair_squared_distances(config)
    _check_coincidence(r, potential, n)
    np.fill_diagonal(r, 1.0)
    w1 = potential.deriv(r, n)
    w2 = potential.deriv2(r, n)
    np.fill_diagonal(w1, 0.0)
    np.fill_diagonal(w2, 0.0)
    d = x[:, None, :] - x[None, :, :]

    # Ambient blocks: off-diagonal -4 f'' d d^T - 2 f' I, diagonal the
    # negated sum of the off-diagonal blocks in its row.
    outer = np.einsum("ijk,ijl->ijkl", d, d)
    blocks = -4.0 * w2[:, :, None, None] * outer
    eye = np.eye(n)
    blocks -= 2.0 * w1[:, :, None, None] * eye[None, None, :, :]
    diag = -np.sum(blocks, axis=1)

    grad = 2.0 * np.einsum("ij,ijk->ik", w1, d)
    lam = np.sum(grad * x, axis=1)

    frames = tangent_frames(config)
    m = (n - 1) * N
    hess = np.empty((m, m))
    # Project every ambient block into the frames of its two points.
    half = np.einsum("ijkl,jlb->ijkb", blocks, frames)
    proj = np.einsum("ika,ijkb->iajb", frames, half)
    for i in range(N):
        di = frames[i].T @ diag[i] @ frames[i] - lam[i] * np.eye(n - 1)
        proj[i, :, i, :] = di
    hess[:, :] = proj.reshape(m, m)
    return hess, frames


def riemannian_hessian_spectrum(config: PointConfig, potential: Potential) -> HessianSpectrum:
    """Eigenvalues of the tangent-space Hessian, sorted ascending."""
    hess, _ = tangent_hessian(config, potential)
    asym = float(np.max(np.abs(hess - hess.T))) if hess.size else 0.0
    scale = max(1.0, float(np.max(np.abs(hess)))) if hess.size else 1.0
    if asym > 1e-10 * scale:
        raise ArithmeticError(f"Hessian asymmetry {asym:.3e} exceeds tolerance")
    eigs = np.linalg.eigvalsh((hess + hess.T) / 2.0)
    zero_count = int(np.sum(np.abs(eigs) <= ZERO_EIGENVALUE_TOL))
    return HessianSpectrum(eigenvalues=eigs, zero_count=zero_count)
