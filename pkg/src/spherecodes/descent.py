"""Local minimization on products of unit spheres.

Two stages.  `gradient_descent` runs projected gradient descent with an
Armijo backtracking line search and renormalization back to the sphere
after every step; it is cheap per iteration and converges linearly, so it
is used to reach the basin.  `newton_polish` then applies the Riemannian
Newton iteration in tangent frames, with a spectral pseudoinverse so the
rigid-rotation null space is ignored, and drives the gradient to within a
hair of machine precision.

`random_config` draws starting points from the rotation-invariant
distribution (normalized Gaussians) using a counter-based generator keyed
by the seed, so a configuration is identified by (n, N, seed) alone.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .energy import (
    Harmonic,
    InversePower,
    Logarithmic,
    PointConfig,
    Potential,
    TruncatedPower,
    energy,
    riemannian_gradient,
    tangent_hessian,
)
from .errors import DidNotConverge, NotNearCritical

#: Step lengths below this are treated as a failed line search.
STEP_FLOOR = 1e-18

#: Gradient sup-norm (relative to potential scale) below which a
#: configuration counts as near-critical and Newton polish may start.
NEAR_CRITICAL_FACTOR = 1e-3

#: Eigenvalues below this fraction of the largest Hessian eigenvalue are
#: dropped from the Newton step (rigid rotations live there).
PSEUDOINVERSE_CUTOFF = 1e-10


@dataclass(frozen=True)
class DescentSettings:
    """Knobs for `gradient_descent`.

    initial_step of None means 1/N, which matches the scale of the
    renormalization retraction for well-separated points.  polish controls
    whether a finished descent is handed to `newton_polish` when its
    gradient is already small enough for the quadratic model.
    """

    max_iterations: int = 20000
    gradient_tolerance: float = 1e-12
    initial_step: float | None = None
    armijo_c: float = 1e-4
    backtrack_factor: float = 0.5
    polish: bool = True

    def __post_init__(self) -> None:
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")
        if self.gradient_tolerance <= 0.0:
            raise ValueError("gradient_tolerance must be positive")
        if self.initial_step is not None and self.initial_step <= 0.0:
            raise ValueError("initial_step must be positive")
        if not 0.0 < self.backtrack_factor < 1.0:
            raise ValueError("backtrack_factor must lie in (0, 1)")
        if not 0.0 < self.armijo_c < 1.0:
            raise ValueError("armijo_c must lie in (0, 1)")


@dataclass(frozen=True)
class DescentResult:
    """Outcome of a minimization stage.

    status is one of 'converged', 'max_iterations', 'stalled'; converged
    mirrors it as a boolean.  energy and gradient_norm (sup-norm) are
    recomputed from the final configuration with the public routines, so
    they are directly comparable across runs and stages.  seed records the
    initialization that produced the start, zero when unknown.
    """

    config: PointConfig
    energy: float
    iterations: int
    converged: bool
    gradient_norm: float
    seed: int
    status: str


_STATUS_NAMES = {
    _kernels.STATUS_CONVERGED: "converged",
    _kernels.STATUS_MAX_ITERATIONS: "max_iterations",
    _kernels.STATUS_STALLED: "stalled",
}


def random_config(n: int, N: int, seed: int) -> PointConfig:
    """Uniform random configuration of N points on the sphere in R^n.

    Normalized standard Gaussian rows.  The generator is keyed, not
    seeded sequentially, so nearby seeds give unrelated streams.
    """
    if n < 2:
        raise ValueError("dimension must be at least 2")
    if N < 1:
        raise ValueError("need at least one point")
    rng = np.random.Generator(np.random.Philox(key=seed))
    rows = rng.standard_normal((N, n))
    norms = np.linalg.norm(rows, axis=1, keepdims=True)
    return PointConfig(rows / norms)


def _kernel_code(potential: Potential, n: int) -> tuple[int, float]:
    if isinstance(potential, InversePower):
        return _kernels.POT_INVERSE, float(potential.exponent)
    if isinstance(potential, Harmonic):
        return _kernels.POT_INVERSE, n / 2.0 - 1.0
    if isinstance(potential, TruncatedPower):
        return _kernels.POT_TRUNCATED, float(potential.degree)
    if isinstance(potential, Logarithmic):
        return _kernels.POT_LOG, 0.0
    raise TypeError(f"unsupported potential {potential!r}")


def gradient_descent(
    config: PointConfig,
    potential: Potential,
    settings: DescentSettings | None = None,
    seed: int = 0,
) -> DescentResult:
    """Minimize the pair energy by projected gradient descent.

    The energy sequence over accepted steps is non-increasing.  'stalled'
    means the line search could not find a decrease above the step floor,
    which at an interior point only happens once the gradient is dominated
    by rounding; it is reported in the result, not raised, and callers
    decide with the gradient norm.  With settings.polish the descent
    output is handed to `newton_polish` whenever it is near-critical; a
    polish that fails to improve leaves the descent result untouched.
    """
    if settings is None:
        settings = DescentSettings()
    kind, p = _kernel_code(potential, config.n)
    step0 = settings.initial_step
    if step0 is None:
        step0 = 1.0 / config.N
    x = config.points.copy()
    status_code, iterations, _, _ = _kernels.kernel_descent(
        x,
        kind,
        p,
        settings.max_iterations,
        settings.gradient_tolerance,
        step0,
        settings.armijo_c,
        settings.backtrack_factor,
        STEP_FLOOR,
    )
    final = PointConfig.from_rows(x)
    status = _STATUS_NAMES[int(status_code)]
    result = DescentResult(
        config=final,
        energy=energy(final, potential),
        iterations=int(iterations),
        converged=status == "converged",
        gradient_norm=riemannian_gradient(final, potential).sup_norm(),
        seed=seed,
        status=status,
    )
    if not settings.polish:
        return result
    scale = potential.magnitude_scale(config.n)
    if result.gradient_norm > NEAR_CRITICAL_FACTOR * scale:
        return result
    try:
        polished = newton_polish(final, potential)
    except DidNotConverge:
        return result
    conv = result.converged or polished.gradient_norm <= settings.gradient_tolerance
    return DescentResult(
        config=polished.config,
        energy=polished.energy,
        iterations=result.iterations + polished.iterations,
        converged=conv,
        gradient_norm=polished.gradient_norm,
        seed=seed,
        status="converged" if conv else result.status,
    )


def newton_polish(
    config: PointConfig,
    potential: Potential,
    tolerance: float | None = None,
    max_iterations: int = 100,
    seed: int = 0,
) -> DescentResult:
    """Drive a near-critical configuration to machine-precision criticality.

    Solves the tangent-frame Newton system with a spectral pseudoinverse
    (relative cutoff 1e-10) so directions along rigid rotations are left
    alone, then retracts by renormalization.  Steps are halved until the
    gradient sup-norm does not increase, so a successful polish never
    leaves the gradient larger than it started.

    tolerance of None means 1e-13 times the potential's magnitude scale.
    Raises NotNearCritical if the starting gradient is too large for the
    quadratic model to be trusted, DidNotConverge if the target is not
    reached.
    """
    scale = potential.magnitude_scale(config.n)
    if tolerance is None:
        tolerance = 1e-13 * scale
    grad = riemannian_gradient(config, potential)
    gnorm = grad.sup_norm()
    threshold = NEAR_CRITICAL_FACTOR * scale
    if gnorm > threshold:
        raise NotNearCritical(gnorm, threshold)
    current = config
    for iteration in range(max_iterations):
        if gnorm <= tolerance:
            return DescentResult(
                config=current,
                energy=energy(current, potential),
                iterations=iteration,
                converged=True,
                gradient_norm=gnorm,
                seed=seed,
                status="converged",
            )
        hess, frames = tangent_hessian(current, potential)
        hess = 0.5 * (hess + hess.T)
        try:
            eigenvalues, eigenvectors = np.linalg.eigh(hess)
        except np.linalg.LinAlgError as exc:
            # LAPACK can refuse pathological near-singular Hessians
            raise DidNotConverge(f"eigendecomposition failed: {exc}") from exc
        cutoff = PSEUDOINVERSE_CUTOFF * np.max(np.abs(eigenvalues))
        keep = np.abs(eigenvalues) > cutoff
        inverse = np.zeros_like(eigenvalues)
        inverse[keep] = 1.0 / eigenvalues[keep]
        rhs = np.einsum("ikm,ik->im", frames, grad.vectors).reshape(-1)
        step_flat = eigenvectors @ (inverse * (eigenvectors.T @ rhs))
        step = np.einsum(
            "ikm,im->ik",
            frames,
            step_flat.reshape(current.N, current.n - 1),
        )
        factor = 1.0
        accepted = None
        for _ in range(40):
            candidate = PointConfig.from_rows(current.points - factor * step)
            cand_grad = riemannian_gradient(candidate, potential)
            if cand_grad.sup_norm() <= gnorm:
                accepted = (candidate, cand_grad)
                break
            factor *= 0.5
        if accepted is None:
            raise DidNotConverge(
                f"newton step could not reduce the gradient below {gnorm:.3e}"
            )
        current, grad = accepted
        gnorm = grad.sup_norm()
    if gnorm <= tolerance:
        return DescentResult(
            config=current,
            energy=energy(current, potential),
            iterations=max_iterations,
            converged=True,
            gradient_norm=gnorm,
            seed=seed,
            status="converged",
        )
    raise DidNotConverge(
        f"gradient sup-norm {gnorm:.3e} above target {tolerance:.3e} "
        f"after {max_iterations} newton iterations"
    )
