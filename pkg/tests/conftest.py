"""Shared oracles and helpers for the test suite.

The finite-difference gradient and Hessian oracles here are written
directly from the definition of the energy, independently of the library's
derivative code, so the two routes check each other.
"""

from __future__ import annotations

import numpy as np

from spherecodes import PointConfig, energy
from spherecodes.energy import tangent_frames


def random_unit_points(n: int, N: int, seed: int, min_sq_dist: float = 0.0) -> np.ndarray:
    """Uniform random unit points; optionally reject clumped draws."""
    rng = np.random.default_rng(seed)
    for _ in range(200):
        pts = rng.standard_normal((N, n))
        pts /= np.linalg.norm(pts, axis=1, keepdims=True)
        if N == 1:
            return pts
        d = pts[:, None, :] - pts[None, :, :]
        r = np.einsum("ijk,ijk->ij", d, d)
        np.fill_diagonal(r, np.inf)
        if r.min() >= min_sq_dist:
            return pts
    raise RuntimeError("could not draw a spread-out configuration")


def random_orthogonal(n: int, seed: int) -> np.ndarray:
    """Haar-ish random orthogonal matrix from a seeded QR factorization."""
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def fd_riemannian_gradient(config: PointConfig, potential, h: float = 1e-5) -> np.ndarray:
    """Central differences of the energy along tangent directions.

    Moves one point at a time along an orthonormal tangent direction,
    renormalizes, and differences the total energy.
    """
    frames = tangent_frames(config)
    N, n = config.points.shape
    out = np.zeros((N, n))
    for i in range(N):
        for a in range(n - 1):
            u = frames[i][:, a]
            plus = config.points.copy()
            plus[i] = plus[i] + h * u
            plus[i] /= np.linalg.norm(plus[i])
            minus = config.points.copy()
            minus[i] = minus[i] - h * u
            minus[i] /= np.linalg.norm(minus[i])
            slope = (energy(PointConfig(plus), potential) - energy(PointConfig(minus), potential)) / (2 * h)
            out[i] += slope * u
    return out


def fd_tangent_hessian(config: PointConfig, potential, h: float = 1e-5) -> np.ndarray:
    """Finite-difference Hessian in tangent frames, valid near critical points."""
    from spherecodes import riemannian_gradient

    frames = tangent_frames(config)
    N, n = config.points.shape
    m = (n - 1) * N
    out = np.zeros((m, m))
    col = 0
    for j in range(N):
        for b in range(n - 1):
            u = frames[j][:, b]
            plus = config.points.copy()
            plus[j] = plus[j] + h * u
            plus[j] /= np.linalg.norm(plus[j])
            minus = config.points.copy()
            minus[j] = minus[j] - h * u
            minus[j] /= np.linalg.norm(minus[j])
            gp = riemannian_gradient(PointConfig(plus), potential).vectors
            gm = riemannian_gradient(PointConfig(minus), potential).vectors
            diff = (gp - gm) / (2 * h)
            # Express the gradient difference in the unperturbed frames.
            out[:, col] = np.concatenate([frames[i].T @ diff[i] for i in range(N)])
            col += 1
    return out
