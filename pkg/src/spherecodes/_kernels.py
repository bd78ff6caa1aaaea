"""Compiled inner loops for gradient descent.

The descent loop runs millions of times during a search, so the energy,
gradient, and Armijo backtracking live here as nopython kernels.  Pair
order and reduction order are fixed by the loops, which makes every run
bit-reproducible for identical inputs.

Potential dispatch uses small integer codes; the harmonic potential is
resolved to an inverse power by the caller before entering the kernels.
"""

from __future__ import annotations

import numpy as np
from numba import njit

POT_INVERSE = 0
POT_TRUNCATED = 1
POT_LOG = 2

STATUS_CONVERGED = 0
STATUS_MAX_ITERATIONS = 1
STATUS_STALLED = 2


@njit(cache=True)
def kernel_energy(x, kind, p):
    N, n = x.shape
    total = 0.0
    for i in range(N):
        for j in range(i + 1, N):
            r = 0.0
            for k in range(n):
                t = x[i, k] - x[j, k]
                r += t * t
            if kind == POT_INVERSE:
                total += r ** (-p)
            elif kind == POT_TRUNCATED:
                total += (4.0 - r) ** p
            else:
                total += -np.log(r)
    return total


@njit(cache=True)
def kernel_energy_gradient(x, kind, p, g):
    """Energy plus the tangentially projected gradient, written into g."""
    N, n = x.shape
    for i in range(N):
        for k in range(n):
            g[i, k] = 0.0
    total = 0.0
    for i in range(N):
        for j in range(i + 1, N):
            r = 0.0
            for k in range(n):
                t = x[i, k] - x[j, k]
                r += t * t
            if kind == POT_INVERSE:
                total += r ** (-p)
                w = -2.0 * p * r ** (-p - 1.0)
            elif kind == POT_TRUNCATED:
                total += (4.0 - r) ** p
                w = -2.0 * p * (4.0 - r) ** (p - 1.0)
            else:
                total += -np.log(r)
                w = -2.0 / r
            for k in range(n):
                d = w * (x[i, k] - x[j, k])
                g[i, k] += d
                g[j, k] -= d
    for i in range(N):
        radial = 0.0
        for k in range(n):
            radial += g[i, k] * x[i, k]
        for k in range(n):
            g[i, k] -= radial * x[i, k]
    return total


@njit(cache=True)
def kernel_descent(x, kind, p, max_iter, gtol, step0, armijo_c, backtrack, step_floor):
    """Armijo gradient descent with per-point renormalization.

    Mutates x in place.  Returns (status, iterations, energy, step).
    The trial step grows by one backtracking factor per iteration, so the
    line search usually costs a single extra energy evaluation.

    Besides the step-underflow stall, the search also stalls once the
    first-order decrease t * |g|^2 of every admissible step falls below
    the floating-point resolution of the total energy: past that point an
    energy comparison cannot distinguish progress from rounding noise, so
    continuing would accept a random walk.  Callers finish the job with a
    Newton stage that works on the gradient instead of the energy.
    """
    N, n = x.shape
    npairs = 0.5 * N * (N - 1)
    g = np.empty((N, n))
    xt = np.empty((N, n))
    e = kernel_energy_gradient(x, kind, p, g)
    t = step0
    for it in range(max_iter):
        gsup = 0.0
        for i in range(N):
            for k in range(n):
                a = abs(g[i, k])
                if a > gsup:
                    gsup = a
        if gsup <= gtol:
            return STATUS_CONVERGED, it, e, t
        gg = 0.0
        for i in range(N):
            for k in range(n):
                gg += g[i, k] * g[i, k]
        resolution = 8.9e-16 * (abs(e) + npairs)
        t = t / backtrack
        accepted = False
        et = 0.0
        while t >= step_floor:
            if t * gg < resolution:
                return STATUS_STALLED, it, e, t
            for i in range(N):
                norm = 0.0
                for k in range(n):
                    v = x[i, k] - t * g[i, k]
                    xt[i, k] = v
                    norm += v * v
                norm = np.sqrt(norm)
                for k in range(n):
                    xt[i, k] /= norm
            et = kernel_energy(xt, kind, p)
            if et <= e - armijo_c * t * gg:
                accepted = True
                break
            t *= backtrack
        if not accepted:
            return STATUS_STALLED, it, e, t
        for i in range(N):
            for k in range(n):
                x[i, k] = xt[i, k]
        e = kernel_energy_gradient(x, kind, p, g)
    return STATUS_MAX_ITERATIONS, max_iter, e, t
