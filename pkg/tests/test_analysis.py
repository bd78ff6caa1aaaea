"""Tests for configuration analysis.

Oracles: Gegenbauer sums are cross-checked against scipy's ultraspherical
polynomials (and cosine sums for the circle); fiber images are checked by
pairwise-distance geometry of the platonic solids; recognized values are
reconstructed in closed form.  Catalog balance flags were frozen from an
independent probe of the defining inner products.
"""

import math

import numpy as np
import pytest
import scipy.special
from hypothesis import given, settings, strategies as st

from conftest import random_orthogonal, random_unit_points

from spherecodes.builders import (
    build_40_in_10,
    build_64_in_14_gram,
    build_cross_polytope,
    build_ngon,
    build_simplex,
)
from spherecodes.catalog import build_catalog, catalog_entry
from spherecodes.energy import Harmonic, PointConfig, energy
from spherecodes.analysis import (
    design_strength,
    distance_spectrum,
    hopf_map,
    is_balanced,
    parameter_count,
    project_svg,
    recognize_value,
    _gegenbauer_sums,
)
from spherecodes.errors import ShapeMismatch


def entry_config(name):
    return build_catalog(catalog_entry(name))


def square_opposite_point():
    # a square on the equator with one pole: the classic one-parameter family
    return PointConfig.from_rows(
        np.array([[1, 0, 0], [0, 1, 0], [-1, 0, 0], [0, -1, 0], [0, 0, 1.0]])
    )


class TestDistanceSpectrum:
    def test_cross_polytope_classes(self):
        for n in (3, 4, 5):
            spec = distance_spectrum(build_cross_polytope(n))
            assert [c.representative for c in spec.classes] == pytest.approx(
                [2.0, 4.0], abs=1e-12
            )
            assert [c.multiplicity for c in spec.classes] == [2 * n * (n - 1), n]

    def test_multiplicities_sum(self):
        cfg = PointConfig.from_rows(random_unit_points(3, 9, seed=2, min_sq_dist=0.05))
        spec = distance_spectrum(cfg)
        total = sum(c.multiplicity for c in spec.classes)
        assert total == 9 * 8 // 2

    def test_classes_disjoint(self):
        spec = distance_spectrum(entry_config("hopf48_48_4"))
        seen = set()
        for cls in spec.classes:
            for pair in cls.pairs:
                assert pair not in seen
                seen.add(pair)

    def test_schlaefli_two_classes(self):
        spec = distance_spectrum(entry_config("schlaefli_27_6"))
        # inner products -1/2 and 1/4 as squared distances
        assert spec.values == pytest.approx([1.5, 3.0], abs=1e-12)

    def test_forty_four_classes(self):
        spec = distance_spectrum(build_40_in_10())
        assert len(spec.classes) == 4

    def test_ambiguity_flagged_not_fatal(self):
        spec = distance_spectrum(build_ngon(12), tol=0.02)
        assert spec.ambiguous

    def test_bad_tolerance(self):
        with pytest.raises(ValueError):
            distance_spectrum(build_simplex(2), tol=0.0)


class TestBalance:
    def test_simplices_balanced(self):
        for n in (2, 4, 7):
            assert bool(is_balanced(build_simplex(n)))

    def test_cell600_balanced(self):
        assert bool(is_balanced(entry_config("cell600_120_4")))

    def test_square_opposite_point_unbalanced(self):
        report = is_balanced(square_opposite_point())
        assert not report.balanced
        assert report.witness_point is not None
        assert report.witness_distance is not None
        assert report.worst_norm > 1e-3

    def test_layered_is_not_balanced(self):
        assert not is_balanced(entry_config("layered_74_5")).balanced

    def test_balanced_entries_have_zero_parameters(self):
        for name in ("schlaefli_27_6", "petersen_10_4", "code_40_10"):
            cfg = entry_config(name)
            assert bool(is_balanced(cfg))
            assert parameter_count(cfg) == 0


class TestParameterCount:
    def test_square_opposite_point_one(self):
        assert parameter_count(square_opposite_point()) == 1

    def test_layered_nonzero(self):
        assert parameter_count(entry_config("layered_74_5")) > 0

    def test_rotation_invariance(self):
        cfg = square_opposite_point()
        q = random_orthogonal(3, seed=11)
        rotated = PointConfig.from_rows(cfg.points @ q.T)
        assert parameter_count(rotated) == 1


class TestDesignStrength:
    def test_recurrence_matches_scipy(self):
        rng = np.random.default_rng(3)
        t = rng.uniform(-1.0, 1.0, size=(4, 4))
        t = (t + t.T) / 2.0
        np.fill_diagonal(t, 1.0)
        for n in (3, 5, 8):
            lam = (n - 2) / 2.0
            mine = _gegenbauer_sums(t, n, 6)
            for k in range(1, 7):
                poly = scipy.special.gegenbauer(k, lam)
                expect = float((poly(t) / poly(1.0)).sum())
                assert mine[k - 1] == pytest.approx(expect, rel=1e-10, abs=1e-10)

    def test_circle_case_is_cosine_sum(self):
        cfg = build_ngon(9)
        t = cfg.points @ cfg.points.T
        theta = np.arccos(np.clip(t, -1, 1))
        mine = _gegenbauer_sums(t, 2, 5)
        for k in range(1, 6):
            assert mine[k - 1] == pytest.approx(float(np.cos(k * theta).sum()), abs=1e-8)

    def test_ngon_strength(self):
        for N in (4, 5, 7):
            assert design_strength(build_ngon(N), N + 2) == N - 1

    def test_forty_exactly_three(self):
        assert design_strength(build_40_in_10(), 6) == 3

    def test_sixty_four_exactly_three(self):
        assert design_strength(build_64_in_14_gram(), 6) == 3

    def test_orthogonal_invariance(self):
        cfg = build_40_in_10()
        q = random_orthogonal(10, seed=4)
        rotated = PointConfig.from_rows(cfg.points @ q.T)
        assert design_strength(rotated, 6) == 3

    def test_bad_degree(self):
        with pytest.raises(ValueError):
            design_strength(build_simplex(2), 0)


def assert_octahedron(points):
    g = points @ points.T
    off = np.sort(g[np.triu_indices(6, 1)])
    assert off[:3] == pytest.approx([-1, -1, -1], abs=1e-9)
    assert np.abs(off[3:]).max() <= 1e-9


def assert_icosahedron(points):
    g = points @ points.T
    off = np.abs(g[np.triu_indices(12, 1)])
    inv = 1.0 / math.sqrt(5.0)
    assert np.all((np.abs(off - 1.0) <= 1e-9) | (np.abs(off - inv) <= 1e-9))


class TestHopfMap:
    def test_requires_dimension_four(self):
        with pytest.raises(ShapeMismatch):
            hopf_map(build_simplex(3))

    def test_hopf48_octahedron(self):
        image = hopf_map(entry_config("hopf48_48_4"))
        assert image.multiplicities == (8,) * 6
        assert_octahedron(image.config.points)

    def test_cell600_icosahedron(self):
        image = hopf_map(entry_config("cell600_120_4"))
        assert image.multiplicities == (10,) * 12
        assert_icosahedron(image.config.points)

    def test_torus_thirteen_on_a_latitude(self):
        image = hopf_map(entry_config("torus_13_4"))
        assert len(image.multiplicities) == 13
        z = image.config.points[:, 2]
        assert np.ptp(z) <= 1e-9

    def test_commutes_with_circle_action(self):
        cfg = entry_config("hopf48_48_4")
        theta = 0.7331
        c, s = math.cos(theta), math.sin(theta)
        block = np.array([[c, -s], [s, c]])
        q = np.zeros((4, 4))
        q[:2, :2] = block
        q[2:, 2:] = block
        rotated = PointConfig.from_rows(cfg.points @ q.T)
        a = np.array(sorted(map(tuple, np.round(hopf_map(cfg).config.points, 9))))
        b = np.array(sorted(map(tuple, np.round(hopf_map(rotated).config.points, 9))))
        assert np.abs(a - b).max() <= 1e-9


class TestRecognizeValue:
    def test_quarter(self):
        got = recognize_value(0.25)
        assert got.kind == "rational"
        assert (got.p, got.q) == (1, 4)

    def test_pentagon_cosine(self):
        got = recognize_value((math.sqrt(5.0) - 1.0) / 4.0)
        assert got.kind == "quadratic"
        assert (got.p, got.q, got.r, got.disc) == (-1, 1, 4, 5)
        assert abs(got.value - (math.sqrt(5.0) - 1.0) / 4.0) <= 1e-10

    def test_competitor_alpha(self):
        got = recognize_value((math.sqrt(109.0) - 1.0) / 54.0)
        assert got.kind == "quadratic"
        assert (got.p, got.q, got.r, got.disc) == (-1, 1, 54, 109)

    def test_unrecognized(self):
        assert recognize_value(0.123456789).kind == "unrecognized"

    def test_magnitude_precondition(self):
        with pytest.raises(ValueError):
            recognize_value(11.0)

    @settings(max_examples=40, deadline=None)
    @given(
        p=st.integers(min_value=-999, max_value=999),
        q=st.integers(min_value=100, max_value=999),
    )
    def test_rational_round_trip(self, p, q):
        got = recognize_value(p / q)
        assert got.kind == "rational"
        assert abs(got.value - p / q) <= 1e-10


class TestProjectSvg:
    def test_byte_identical(self):
        cfg = entry_config("petersen_10_4")
        assert project_svg(cfg, 31) == project_svg(cfg, 31)

    def test_seed_changes_output(self):
        cfg = entry_config("petersen_10_4")
        assert project_svg(cfg, 1) != project_svg(cfg, 2)

    def test_octahedron_edges(self):
        svg = project_svg(build_cross_polytope(3), 9)
        assert svg.count("<line") == 12
        assert svg.count("<circle") == 7  # outline plus six points

    def test_hopf48_octagon_segments(self):
        svg = project_svg(entry_config("hopf48_48_4"), 3)
        # six octagons of minimal-distance edges
        assert svg.count("<line") == 48
        assert svg.count("<circle") == 49

    def test_document_shape(self):
        svg = project_svg(build_simplex(2), 0)
        assert svg.startswith("<svg ")
        assert 'viewBox="-1.05 -1.05 2.10 2.10"' in svg
        assert 'r="0.012"' in svg
        assert svg.rstrip().endswith("</svg>")


class TestEnergySanity:
    def test_schlaefli_harmonic_energy(self):
        cfg = entry_config("schlaefli_27_6")
        assert energy(cfg, Harmonic()) == pytest.approx(111.0, abs=1e-9)
