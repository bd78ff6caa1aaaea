"""Random-restart energy minimization and landscape statistics.

Each trial draws a fresh random configuration from a per-trial seed,
descends, and polishes.  Converged trials are merged into energy levels;
the report also carries gap statistics over the found levels and feeds
the universality screen, which pits a candidate configuration against
fresh searches across the truncated-power family.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass

import numpy as np

from .analysis import is_balanced, parameter_count
from .descent import DescentSettings, gradient_descent, random_config
from .energy import PointConfig, Potential, TruncatedPower, energy
from .errors import ShapeMismatch, TooFewLevels
from .symmetry import automorphism_group

__all__ = [
    "LocalMinimumRecord",
    "SearchReport",
    "GapSummary",
    "ScreenEntry",
    "ScreenReport",
    "mix_seed",
    "run_search",
    "gap_statistics",
    "universality_screen",
    "compare_candidates",
]

_MASK64 = (1 << 64) - 1
#: SplitMix64 increment and finalizer multipliers; fixed so that per-trial
#: seeds are reproducible across releases.
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

DEDUP_TOL = 1e-9
GAP_FLAG_RATIO = 10.0
VERDICT_TOL = 1e-9


def mix_seed(master_seed: int, index: int) -> int:
    """Per-trial 64-bit seed from the master seed and the trial index."""
    z = (master_seed + (index + 1) * _GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class LocalMinimumRecord:
    """One energy level found by the search.

    The analysis fields are None on records ingested from fixture files
    that carry only energies and counts.
    """

    energy: float
    config: PointConfig | None
    count: int
    parameters: int | None
    balanced: bool | None
    symmetry_order: int | None
    seeds: tuple[int, ...]


@dataclass(frozen=True)
class GapSummary:
    """Consecutive gaps between sorted energy levels."""

    levels: tuple[float, ...]
    gaps: tuple[float, ...]
    median_spacing: float
    ratios: tuple[float, ...]
    flagged: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class SearchReport:
    """Outcome of a random-restart search."""

    n: int
    N: int
    potential: Potential
    trials: int
    master_seed: int
    records: tuple[LocalMinimumRecord, ...]
    unconverged: int
    dedup_tolerance: float = DEDUP_TOL

    @property
    def best(self) -> LocalMinimumRecord | None:
        return self.records[0] if self.records else None

    @property
    def gaps(self) -> GapSummary | None:
        if len(self.records) < 3:
            return None
        return _gap_summary(r.energy for r in self.records)


def _run_trial(args) -> tuple[int, bool, float, np.ndarray]:
    n, N, potential, settings, seed = args
    start = random_config(n, N, seed)
    result = gradient_descent(start, potential, settings, seed=seed)
    return seed, result.converged, result.energy, result.config.points


def run_search(
    n: int,
    N: int,
    potential: Potential,
    trials: int,
    master_seed: int,
    settings: DescentSettings | None = None,
    jobs: int = 1,
) -> SearchReport:
    """Random-restart minimization with per-level aggregation.

    Trial i is fully determined by mix_seed(master_seed, i), so reports
    are identical regardless of how many worker processes run the trials;
    results are merged in trial-index order.  Converged trials whose
    polished energies agree within the dedup tolerance count as the same
    level; the first representative is kept and analyzed.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if settings is None:
        settings = DescentSettings()
    tasks = [(n, N, potential, settings, mix_seed(master_seed, i)) for i in range(trials)]
    if jobs > 1:
        chunk = max(1, trials // (jobs * 8))
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run_trial, tasks, chunksize=chunk))
    else:
        outcomes = [_run_trial(t) for t in tasks]

    levels: list[dict] = []
    unconverged = 0
    for seed, converged, e, points in outcomes:
        if not converged:
            unconverged += 1
            continue
        hit = None
        for lv in levels:
            if abs(e - lv["energy"]) <= DEDUP_TOL:
                hit = lv
                break
        if hit is None:
            levels.append(
                {"energy": e, "points": points, "count": 1, "seeds": [seed]}
            )
        else:
            hit["count"] += 1
            hit["seeds"].append(seed)

    records = []
    for lv in sorted(levels, key=lambda v: v["energy"]):
        rep = PointConfig.from_rows(lv["points"])
        records.append(
            LocalMinimumRecord(
                energy=lv["energy"],
                config=rep,
                count=lv["count"],
                parameters=parameter_count(rep),
                balanced=bool(is_balanced(rep)),
                symmetry_order=automorphism_group(rep).order,
                seeds=tuple(lv["seeds"]),
            )
        )
    return SearchReport(
        n=n,
        N=N,
        potential=potential,
        trials=trials,
        master_seed=master_seed,
        records=tuple(records),
        unconverged=unconverged,
    )


def _gap_summary(energies) -> GapSummary:
    levels = tuple(sorted(float(e) for e in energies))
    gaps = tuple(b - a for a, b in zip(levels, levels[1:]))
    median = float(np.median(gaps))
    if median > 0.0:
        ratios = tuple(g / median for g in gaps)
    else:
        ratios = tuple(0.0 for _ in gaps)
    flagged = tuple(
        (levels[i], levels[i + 1])
        for i, r in enumerate(ratios)
        if r > GAP_FLAG_RATIO
    )
    return GapSummary(
        levels=levels,
        gaps=gaps,
        median_spacing=median,
        ratios=ratios,
        flagged=flagged,
    )


def gap_statistics(report: SearchReport) -> GapSummary:
    """Gaps between found energy levels, flagged when far above median."""
    if len(report.records) < 3:
        raise TooFewLevels(
            f"gap statistics need at least 3 levels, found {len(report.records)}"
        )
    return _gap_summary(r.energy for r in report.records)


@dataclass(frozen=True)
class ScreenEntry:
    """Screen outcome at a single truncated-power degree."""

    k: int
    candidate_energy: float
    best_found: float
    verdict: str


@dataclass(frozen=True)
class ScreenReport:
    """Screen outcomes across degrees plus the overall verdict."""

    entries: tuple[ScreenEntry, ...]
    counterexample: bool

    @property
    def verdict(self) -> str:
        if self.counterexample:
            return "counterexample found"
        return "consistent with universal optimality"


def universality_screen(
    candidate: PointConfig,
    k_max: int,
    trials_per_k: int,
    master_seed: int,
    settings: DescentSettings | None = None,
    jobs: int = 1,
) -> ScreenReport:
    """Challenge a candidate optimum across the truncated-power family.

    For each degree k a fresh search tries to beat the candidate's energy
    under (4-r)^k.  The margin for a strict verdict scales with the
    energy magnitude, since large k inflates every energy by 4^k.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    entries = []
    for k in range(1, k_max + 1):
        pot = TruncatedPower(k)
        cand_e = energy(candidate, pot)
        report = run_search(
            candidate.n,
            candidate.N,
            pot,
            trials_per_k,
            mix_seed(master_seed, k),
            settings=settings,
            jobs=jobs,
        )
        tol = VERDICT_TOL * max(1.0, abs(cand_e))
        best = report.records[0].energy if report.records else float("inf")
        if best < cand_e - tol:
            verdict = "candidate_beaten"
        elif best > cand_e + tol:
            verdict = "candidate_best"
        else:
            verdict = "tie"
        entries.append(
            ScreenEntry(
                k=k, candidate_energy=cand_e, best_found=best, verdict=verdict
            )
        )
    return ScreenReport(
        entries=tuple(entries),
        counterexample=any(e.verdict == "candidate_beaten" for e in entries),
    )


def compare_candidates(configs, potential: Potential):
    """Rank configurations by energy; ties keep input order.

    Returns (index, energy) pairs sorted ascending.  All configurations
    must share the same point count and dimension.
    """
    configs = list(configs)
    if not configs:
        raise ValueError("nothing to compare")
    shapes = {(c.n, c.N) for c in configs}
    if len(shapes) > 1:
        raise ShapeMismatch(f"mixed shapes {sorted(shapes)}")
    energies = [energy(c, potential) for c in configs]
    order = sorted(range(len(configs)), key=lambda i: (energies[i], i))
    return tuple((i, energies[i]) for i in order)
