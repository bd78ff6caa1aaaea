"""Random-restart search, deduplication, gap statistics, and screening."""

from __future__ import annotations

import numpy as np
import pytest

from spherecodes import (
    GapSummary,
    Harmonic,
    LocalMinimumRecord,
    SearchReport,
    TruncatedPower,
    build_40_in_10,
    build_40_in_10_competitor,
    build_cross_polytope,
    build_diplo_simplex,
    compare_candidates,
    energy,
    gap_statistics,
    mix_seed,
    perturb_diplo_simplex,
    run_search,
    universality_screen,
)
from spherecodes.errors import ShapeMismatch, TooFewLevels
from spherecodes.fileio import format_report
from spherecodes.search import DEDUP_TOL


class TestMixSeed:
    def test_deterministic(self):
        assert mix_seed(12345, 0) == mix_seed(12345, 0)
        assert mix_seed(12345, 0) != mix_seed(12345, 1)
        assert mix_seed(12345, 7) != mix_seed(54321, 7)

    def test_range(self):
        for i in range(50):
            s = mix_seed(999, i)
            assert 0 <= s < 2**64

    def test_spread(self):
        # consecutive indices should not produce clustered outputs
        vals = [mix_seed(1, i) for i in range(200)]
        assert len(set(vals)) == 200
        assert len({v >> 56 for v in vals}) > 50


class TestRunSearch:
    def test_pentagon_energy(self):
        report = run_search(2, 5, Harmonic(), 30, master_seed=11)
        assert len(report.records) == 1
        best = report.best
        assert best.energy == pytest.approx(10.0, abs=1e-9)
        assert best.count == 30
        assert report.unconverged == 0

    def test_counts_partition_trials(self):
        report = run_search(3, 7, Harmonic(), 40, master_seed=5)
        total = sum(r.count for r in report.records) + report.unconverged
        assert total == 40

    def test_records_sorted_and_distinct(self):
        report = run_search(3, 10, Harmonic(), 60, master_seed=5)
        energies = [r.energy for r in report.records]
        assert energies == sorted(energies)
        for a, b in zip(energies, energies[1:]):
            assert b - a > DEDUP_TOL

    def test_record_analysis_fields(self):
        report = run_search(3, 6, Harmonic(), 25, master_seed=9)
        best = report.best
        # octahedron: balanced universal optimum
        assert best.balanced is True
        assert best.parameters == 0
        assert best.symmetry_order == 48
        assert best.config is not None
        assert best.energy == pytest.approx(
            energy(build_cross_polytope(3), Harmonic()), abs=1e-9
        )

    def test_seeds_traceable(self):
        report = run_search(2, 4, Harmonic(), 12, master_seed=3)
        seen = set()
        for record in report.records:
            assert record.count == len(record.seeds)
            seen.update(record.seeds)
        expected = {mix_seed(3, i) for i in range(12)}
        assert seen <= expected

    def test_parallel_report_identical(self):
        serial = run_search(3, 6, Harmonic(), 16, master_seed=21, jobs=1)
        parallel = run_search(3, 6, Harmonic(), 16, master_seed=21, jobs=8)
        assert format_report(serial) == format_report(parallel)


def _fixture_report(energies, counts=None):
    counts = counts or [1] * len(energies)
    records = tuple(
        LocalMinimumRecord(
            energy=e,
            config=None,
            count=c,
            parameters=None,
            balanced=None,
            symmetry_order=None,
            seeds=(),
        )
        for e, c in zip(energies, counts)
    )
    return SearchReport(
        n=3,
        N=8,
        potential=Harmonic(),
        trials=sum(counts),
        master_seed=0,
        records=records,
        unconverged=0,
        dedup_tolerance=DEDUP_TOL,
    )


class TestGapStatistics:
    def test_too_few_levels(self):
        with pytest.raises(TooFewLevels):
            gap_statistics(_fixture_report([1.0, 2.0]))

    def test_equally_spaced_no_flags(self):
        g = gap_statistics(_fixture_report([1.0, 2.0, 3.0, 4.0, 5.0]))
        assert isinstance(g, GapSummary)
        assert g.flagged == ()
        assert g.median_spacing == pytest.approx(1.0)
        assert g.ratios == pytest.approx((1.0, 1.0, 1.0, 1.0))

    def test_single_huge_gap_flagged(self):
        g = gap_statistics(_fixture_report([0.0, 0.1, 0.2, 0.3, 5.0]))
        assert g.flagged == ((0.3, 5.0),)

    def test_levels_sorted_even_if_input_not(self):
        g = gap_statistics(_fixture_report([3.0, 1.0, 2.0]))
        assert g.levels == (1.0, 2.0, 3.0)

    def test_report_property_matches(self):
        report = _fixture_report([0.0, 0.1, 0.2, 4.0])
        assert report.gaps.levels == gap_statistics(report).levels
        assert _fixture_report([1.0, 2.0]).gaps is None


class TestUniversalityScreen:
    def test_cross_polytope_consistent(self):
        report = universality_screen(build_cross_polytope(3), 6, 40, master_seed=13)
        assert report.counterexample is False
        assert report.verdict == "consistent with universal optimality"
        assert [e.k for e in report.entries] == [1, 2, 3, 4, 5, 6]
        for entry in report.entries:
            assert entry.verdict in ("candidate_best", "tie")

    def test_beatable_candidate_is_beaten(self):
        # a 2d square is not optimal for 4 points under high powers of
        # (4 - r); the tetrahedron-like spread in R^3 is out of reach, but
        # a shifted square beats nothing -- use an intentionally bad code:
        # 4 nearly-coincident points lose at every degree
        pts = np.array(
            [
                [1.0, 0.0],
                [0.999, np.sqrt(1 - 0.999**2)],
                [0.998, np.sqrt(1 - 0.998**2)],
                [0.997, np.sqrt(1 - 0.997**2)],
            ]
        )
        from spherecodes import PointConfig

        clump = PointConfig.from_rows(pts)
        report = universality_screen(clump, 3, 15, master_seed=4)
        assert report.counterexample is True
        assert report.verdict == "counterexample found"
        assert any(e.verdict == "candidate_beaten" for e in report.entries)


class TestCompareCandidates:
    def test_forty_beats_competitor_grid(self):
        configs = [build_40_in_10()]
        configs += [build_40_in_10_competitor(a / 100) for a in range(1, 20, 2)]
        ranking = compare_candidates(configs, Harmonic())
        assert ranking[0][0] == 0
        assert ranking[0][1] < ranking[1][1]

    def test_perturbed_diplo_wins_high_degree(self):
        base = build_diplo_simplex(3)
        better = perturb_diplo_simplex(3, 0.8225, 0.3)
        pot = TruncatedPower(40)
        ranking = compare_candidates([base, better], pot)
        assert ranking[0][0] == 1

    def test_single_config(self):
        cfg = build_cross_polytope(2)
        ranking = compare_candidates([cfg], Harmonic())
        assert len(ranking) == 1
        assert ranking[0] == (0, pytest.approx(energy(cfg, Harmonic())))

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            compare_candidates(
                [build_cross_polytope(2), build_cross_polytope(3)], Harmonic()
            )

    def test_empty(self):
        with pytest.raises(ValueError):
            compare_candidates([], Harmonic())
