"""Gram families, codes, and catalog constructions.

Oracles used here:
  - spectra of the parametric Gram families are checked against their
    stated closed forms through an independent eigendecomposition;
  - the cubic root for the pole-plus-simplices family is cross-checked
    with a polynomial companion-matrix solve (numpy.roots);
  - code sizes and minimal distances are recomputed from scratch by
    brute-force Hamming distance;
  - max inner products of catalog entries are compared with their exact
    closed forms;
  - realization from a Gram matrix is verified by round trip.
"""

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spherecodes import (
    BinaryCode,
    GramMatrix,
    Harmonic,
    PointConfig,
    build_40_in_10,
    build_40_in_10_competitor,
    build_64_in_14_gram,
    build_96_in_9,
    build_c_n,
    build_catalog,
    build_cross_polytope,
    build_diplo_simplex,
    build_gram_12_in_4_family1,
    build_gram_12_in_4_family2,
    build_gram_16_in_5,
    build_ngon,
    build_nordstrom_robinson,
    build_simplex,
    catalog_entry,
    catalog_names,
    cube_embed,
    energy,
    perturb_diplo_simplex,
    realize_from_gram,
    shorten,
)
from spherecodes.builders import bisect_root, simplex_unit_vectors
from spherecodes.catalog import balanced_entries, expected_max_cosine
from spherecodes.errors import (
    EmptyShortening,
    NotPSD,
    ParameterOutOfRange,
    RankTooHigh,
    UnknownEntry,
)
from spherecodes import roots

from conftest import random_unit_points

GRAM_16_A = -0.499890010934
GRAM_16_B = 0.201039702365


def offdiag(g: np.ndarray) -> np.ndarray:
    return g[~np.eye(len(g), dtype=bool)]


def gram_of(config: PointConfig) -> np.ndarray:
    return config.points @ config.points.T


def min_distance(config: PointConfig) -> float:
    return math.sqrt(2.0 - 2.0 * offdiag(gram_of(config)).max())


class TestGramFamilies:
    def test_16_in_5_reference_spectrum(self):
        g = build_gram_16_in_5(GRAM_16_A, GRAM_16_B)
        ev = np.sort(np.linalg.eigvalsh(g.entries))
        s = 6 * GRAM_16_A**2 + 9 * GRAM_16_B**2
        assert np.abs(ev[:11]).max() < 1e-9
        expected = np.sort([1 + s] + [(15 - s) / 4] * 4)
        assert np.abs(np.sort(ev[11:]) - expected).max() < 1e-9
        config = realize_from_gram(g, 5)
        assert np.abs(gram_of(config) - g.entries).max() < 1e-9

    def test_16_in_5_zero_parameters(self):
        g = build_gram_16_in_5(0.0, 0.0).entries
        # derived entry values: c, d, e = f, g
        assert g[1, 8] == pytest.approx(math.sqrt(2) / 4, abs=1e-15)
        assert g[1, 7] == pytest.approx(-math.sqrt(2) / 2, abs=1e-15)
        assert g[0, 1] == pytest.approx(0.0, abs=1e-15)
        sub = g[1:, 1:]
        ev = np.linalg.eigvalsh(sub)
        assert int((ev > 1e-9).sum()) == 4

    def test_16_in_5_rejects_bad_parameters(self):
        with pytest.raises(ParameterOutOfRange):
            build_gram_16_in_5(1.0, 0.0)
        with pytest.raises(ParameterOutOfRange):
            build_gram_16_in_5(0.0, -1.5)

    @pytest.mark.parametrize("a", [0.1, 0.25, 0.4])
    def test_family1_spectrum(self, a):
        g = build_gram_12_in_4_family1(a)
        ev = np.sort(np.linalg.eigvalsh(g.entries))
        expected = np.sort([12 * a, 12 * a, 6 - 12 * a, 6 - 12 * a])
        assert np.abs(ev[:8]).max() < 1e-9
        assert np.abs(np.sort(ev[8:]) - expected).max() < 1e-9
        realize_from_gram(g, 4)

    def test_family1_matches_triangle_construction(self):
        alpha = 0.6
        g = build_gram_12_in_4_family1(alpha * alpha / 2).entries
        tri = simplex_unit_vectors(3)
        lift = math.sqrt(1 - alpha * alpha)
        rows = []
        for s in (1.0, -1.0):
            for i in range(3):
                rows.append([*(alpha * tri[i]), s * lift, 0.0])
        for s in (1.0, -1.0):
            for i in range(3):
                rows.append([*(-alpha * tri[i]), 0.0, s * lift])
        other = np.array(rows) @ np.array(rows).T
        assert np.abs(np.sort(np.linalg.eigvalsh(g)) - np.sort(np.linalg.eigvalsh(other))).max() < 1e-9
        assert np.abs(np.sort(offdiag(g)) - np.sort(offdiag(other))).max() < 1e-9

    @pytest.mark.parametrize("a", [0.1, 0.25, 0.3])
    def test_family2_spectrum(self, a):
        g = build_gram_12_in_4_family2(a)
        ev = np.sort(np.linalg.eigvalsh(g.entries))
        expected = np.sort([4 / 3 + 24 * a * a] * 3 + [8 - 72 * a * a])
        assert np.abs(ev[:8]).max() < 1e-9
        assert np.abs(np.sort(ev[8:]) - expected).max() < 1e-9
        realize_from_gram(g, 4)

    def test_family2_quarter_is_the_code_member(self):
        g = build_gram_12_in_4_family2(0.25)
        assert offdiag(g.entries).max() == pytest.approx(0.25, abs=1e-12)

    def test_family_parameter_ranges(self):
        for bad in (0.0, 0.5, -0.1):
            with pytest.raises(ParameterOutOfRange):
                build_gram_12_in_4_family1(bad)
        for bad in (0.0, 1 / 3, 0.4):
            with pytest.raises(ParameterOutOfRange):
                build_gram_12_in_4_family2(bad)

    def test_realize_errors(self):
        bad = np.eye(3)
        bad[0, 1] = bad[1, 0] = 1.5
        with pytest.raises(NotPSD):
            realize_from_gram(GramMatrix(bad), 3)
        with pytest.raises(RankTooHigh):
            realize_from_gram(GramMatrix(np.eye(6)), 4)

    def test_realize_simplex(self):
        N = 5
        g = np.full((N, N), -1.0 / (N - 1))
        np.fill_diagonal(g, 1.0)
        config = realize_from_gram(GramMatrix(g), N - 1)
        assert np.abs(gram_of(config) - g).max() < 1e-9

    @settings(max_examples=25, deadline=None)
    @given(
        n=st.integers(min_value=2, max_value=5),
        N=st.integers(min_value=2, max_value=10),
        seed=st.integers(min_value=0, max_value=10**6),
    )
    def test_realize_round_trip_random(self, n, N, seed):
        pts = random_unit_points(n, N, seed, min_sq_dist=1e-3)
        g = pts @ pts.T
        config = realize_from_gram(GramMatrix(g), n)
        assert np.abs(gram_of(config) - g).max() < 1e-9


class TestCodes:
    def test_nordstrom_robinson_parameters(self):
        code = build_nordstrom_robinson()
        assert code.length == 16
        assert code.size == 256
        assert code.min_distance == 6
        # brute-force recheck of the minimal distance
        words = code.words.astype(np.int64)
        h = (words[:, None, :] != words[None, :, :]).sum(axis=2)
        np.fill_diagonal(h, 99)
        assert h.min() == 6

    def test_shorten_chain(self):
        code = build_nordstrom_robinson()
        once = shorten(code, 0, 0)
        assert (once.length, once.size, once.min_distance) == (15, 128, 6)
        twice = shorten(once, 0, 0)
        assert (twice.length, twice.size, twice.min_distance) == (14, 64, 6)

    def test_shorten_validates(self):
        code = build_nordstrom_robinson()
        with pytest.raises(ValueError):
            shorten(code, 16, 0)
        all_ones = BinaryCode(np.ones((2, 4), dtype=np.uint8) * np.array([[0], [1]], dtype=np.uint8))
        with pytest.raises(EmptyShortening):
            shorten(shorten(all_ones, 0, 0), 0, 1)

    def test_cube_embed_distance_dictionary(self):
        code = shorten(shorten(build_nordstrom_robinson(), 0, 0), 0, 0)
        config = cube_embed(code)
        words = code.words.astype(np.int64)
        hamming = (words[:, None, :] != words[None, :, :]).sum(axis=2)
        d = config.points[:, None, :] - config.points[None, :, :]
        sq = np.einsum("ijk,ijk->ij", d, d)
        assert np.abs(sq - 4.0 * hamming / 14.0).max() < 1e-12

    def test_embed_matches_gram_construction(self):
        embedded = cube_embed(shorten(shorten(build_nordstrom_robinson(), 0, 0), 0, 0))
        direct = build_64_in_14_gram()
        a = np.sort(offdiag(gram_of(embedded)))
        b = np.sort(offdiag(gram_of(direct)))
        assert np.abs(a - b).max() < 1e-9
        ev = np.sort(np.linalg.eigvalsh(gram_of(embedded)))
        assert np.abs(ev[-14:] - 32.0 / 7.0).max() < 1e-9
        assert np.abs(ev[:-14]).max() < 1e-9


class TestPoleAndSimplices:
    def test_pentagon_root(self):
        config = build_c_n(2)
        alpha = config.points[1, 1]
        assert alpha == pytest.approx((math.sqrt(5) - 1) / 4, abs=1e-12)
        g = gram_of(config)
        assert offdiag(g).max() == pytest.approx(math.cos(2 * math.pi / 5), abs=1e-12)

    @pytest.mark.parametrize("n", [2, 3, 4, 6, 10])
    def test_root_against_companion_matrix(self, n):
        config = build_c_n(n)
        alpha = config.points[1, n - 1]
        roots_all = np.roots([n**3 - 4 * n**2 + 4 * n, -(n**2), -n, 1])
        real = [r.real for r in roots_all if abs(r.imag) < 1e-12 and 0 < r.real < 1 / n]
        assert len(real) == 1
        assert alpha == pytest.approx(real[0], abs=1e-12)

    def test_asymptotic_root(self):
        n = 50
        alpha = build_c_n(n).points[1, n - 1]
        assert abs(alpha - (1 / n - math.sqrt(2) / n**1.5)) <= 10 / n**2

    def test_max_cosine_is_alpha(self):
        config = build_c_n(4)
        alpha = config.points[1, 3]
        assert offdiag(gram_of(config)).max() == pytest.approx(alpha, abs=1e-12)
        assert len(config.points) == 9


class TestDiploSimplex:
    def test_hexagon(self):
        config = build_diplo_simplex(2)
        assert len(config.points) == 6
        values = sorted(set(np.round(offdiag(gram_of(config)), 9)))
        assert values == [-1.0, -0.5, 0.5]

    def test_cube(self):
        config = build_diplo_simplex(3)
        assert len(config.points) == 8
        g = gram_of(config)
        assert offdiag(g).max() == pytest.approx(1 / 3, abs=1e-12)
        assert sorted(set(np.round(offdiag(g), 9))) == [
            -1.0,
            pytest.approx(-1 / 3),
            pytest.approx(1 / 3),
        ]

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
    def test_max_cosine(self, n):
        config = build_diplo_simplex(n)
        assert len(config.points) == 2 * n + 2
        assert offdiag(gram_of(config)).max() == pytest.approx(1 / n, abs=1e-12)

    def test_matches_simplex_union_antipode(self):
        simplex = build_simplex(4).points
        union = np.vstack([simplex, -simplex])
        a = np.sort(offdiag(union @ union.T))
        b = np.sort(offdiag(gram_of(build_diplo_simplex(4))))
        assert np.abs(a - b).max() < 1e-12


class TestPerturbedDiplo:
    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_zero_perturbation_odd(self, n):
        k = (n + 1) // 2
        base = math.sqrt((2 * k - 2) / (2 * k - 1))
        assert np.array_equal(
            perturb_diplo_simplex(n, base, 0.0).points,
            build_diplo_simplex(n).points,
        )

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_zero_perturbation_even(self, n):
        k = n // 2
        base = 0.0 if k == 1 else math.sqrt((2 * k + 1) * (2 * k - 2)) / (2 * k)
        assert np.array_equal(
            perturb_diplo_simplex(n, base, 0.0).points,
            build_diplo_simplex(n).points,
        )

    def test_cube_improves(self):
        # rotating one negated face while opening alpha beats the cube
        base = min_distance(build_diplo_simplex(3))
        better = min_distance(perturb_diplo_simplex(3, 0.8225, 0.3))
        assert better > base + 1e-3

    def test_even_constraint_enforced(self):
        with pytest.raises(ParameterOutOfRange):
            perturb_diplo_simplex(4, math.sqrt(10) / 4, 0.0, beta=0.05)

    def test_odd_rejects_beta(self):
        with pytest.raises(ValueError):
            perturb_diplo_simplex(3, 0.9, 0.1, beta=0.2)

    def test_planar_alpha_must_vanish(self):
        with pytest.raises(ParameterOutOfRange):
            perturb_diplo_simplex(2, 0.3, 0.0)

    def test_range_validation(self):
        with pytest.raises(ParameterOutOfRange):
            perturb_diplo_simplex(5, 1.2, 0.0)
        with pytest.raises(ParameterOutOfRange):
            perturb_diplo_simplex(5, 0.9, -0.1)


class TestFortyInTen:
    def test_inner_product_counts(self):
        g = gram_of(build_40_in_10())
        for row in g:
            counts = {
                1.0: 0,
                -0.5: 0,
                -1 / 3: 0,
                0.0: 0,
                1 / 6: 0,
            }
            for value in row:
                matched = [k for k in counts if abs(value - k) < 1e-9]
                assert len(matched) == 1
                counts[matched[0]] += 1
            assert list(counts.values()) == [1, 8, 3, 4, 24]

    def test_orthogonal_tetrahedra(self):
        config = build_40_in_10()
        g = gram_of(config)
        for t in range(5):
            block = g[8 * t : 8 * t + 8, 8 * t : 8 * t + 8]
            first = {0} | {j for j in range(8) if abs(block[0, j] + 1 / 3) < 1e-9}
            second = set(range(8)) - first
            assert len(first) == len(second) == 4
            for group in (first, second):
                for i, j in itertools.combinations(sorted(group), 2):
                    assert block[i, j] == pytest.approx(-1 / 3, abs=1e-12)
            for i in first:
                for j in second:
                    assert block[i, j] == pytest.approx(0.0, abs=1e-12)

    def test_competitor_optimal_alpha(self):
        alpha = (math.sqrt(109) - 1) / 54
        config = build_40_in_10_competitor(alpha)
        assert len(config.points) == 40
        assert offdiag(gram_of(config)).max() == pytest.approx(alpha, abs=1e-12)

    def test_competitor_range(self):
        for bad in (0.0, -0.1, 0.2):
            with pytest.raises(ParameterOutOfRange):
                build_40_in_10_competitor(bad)
        build_40_in_10_competitor(1 / math.sqrt(27))

    def test_competitor_never_wins(self):
        best = energy(build_40_in_10(), Harmonic())
        for alpha in (0.05, 0.1, 0.15, (math.sqrt(109) - 1) / 54):
            assert energy(build_40_in_10_competitor(alpha), Harmonic()) > best


class TestSixtyFourAndNinetySix:
    def test_64_gram_spectrum(self):
        config = build_64_in_14_gram()
        g = gram_of(config)
        values = sorted(set(np.round(offdiag(g), 9)))
        assert values == [
            pytest.approx(-3 / 7),
            pytest.approx(-1 / 7),
            pytest.approx(1 / 7),
        ]
        ev = np.sort(np.linalg.eigvalsh(g))
        assert np.abs(ev[-14:] - 32 / 7).max() < 1e-9
        assert np.abs(ev[:-14]).max() < 1e-9

    def test_96_inner_products(self):
        config = build_96_in_9()
        assert len(config.points) == 96
        values = set(np.round(offdiag(gram_of(config)), 9))
        allowed = {-1.0, -1 / 3, 0.0, 1 / 3}
        for v in values:
            assert any(abs(v - a) < 1e-9 for a in allowed)
        assert offdiag(gram_of(config)).max() == pytest.approx(1 / 3, abs=1e-12)

    def test_96_reconstruction_identity(self):
        config = build_96_in_9()
        tetra = simplex_unit_vectors(4)
        frame = np.zeros((12, 9))
        for b in range(3):
            frame[4 * b : 4 * b + 4, 3 * b : 3 * b + 3] = tetra
        rebuilt = 0.75 * (config.points @ frame.T) @ frame
        assert np.abs(rebuilt - config.points).max() < 1e-12


class TestRootSystems:
    def test_counts_and_norms(self):
        r8 = roots.e8_roots()
        assert r8.shape == (240, 8)
        assert np.abs(np.einsum("ij,ij->i", r8, r8) - 2.0).max() < 1e-12
        assert len(np.unique(np.round(r8, 9), axis=0)) == 240
        assert roots.e7_roots().shape == (126, 8)
        assert roots.e6_roots().shape == (72, 8)

    def test_dual_minimal_vectors(self):
        m7 = roots.e7_dual_minimal()
        assert m7.shape == (56, 8)
        assert np.abs(np.einsum("ij,ij->i", m7, m7) - 1.5).max() < 1e-12
        assert len(np.unique(np.round(m7, 9), axis=0)) == 56
        m6 = roots.e6_dual_minimal()
        assert m6.shape == (54, 8)
        assert np.abs(np.einsum("ij,ij->i", m6, m6) - 4 / 3).max() < 1e-12
        assert len(np.unique(np.round(m6, 9), axis=0)) == 54

    def test_duality_pairing(self):
        # roots pair integrally with the duals: inner products are integers
        r7 = roots.e7_roots()
        m7 = roots.e7_dual_minimal()
        prods = r7 @ m7.T
        assert np.abs(prods - np.round(prods)).max() < 1e-9

    def test_icosahedron_dodecahedron_duality(self):
        ico = roots.icosahedron_vertices()
        dod = roots.dodecahedron_vertices()
        cross = ico @ dod.T
        best = math.sqrt(75 + 30 * math.sqrt(5)) / 15
        assert cross.max() == pytest.approx(best, abs=1e-12)
        # each face center touches exactly three vertices at the extreme angle
        assert ((cross > best - 1e-9).sum(axis=0) == 3).all()

    def test_hoffman_singleton(self):
        a = roots.hoffman_singleton_adjacency()
        assert a.shape == (50, 50)
        assert (a.sum(axis=1) == 7).all()
        g = roots.hs_second_subconstituent_gram()
        ev = np.sort(np.linalg.eigvalsh(g))
        assert np.abs(ev[-14:] - 3.0).max() < 1e-9
        assert np.abs(ev[:-14]).max() < 1e-9


class TestCatalog:
    def test_every_fixed_entry_matches_documentation(self):
        for name in catalog_names():
            if name in ("ngon_N_2",):
                entry = catalog_entry(name, N=7)
            elif name in ("simplex", "cross_polytope", "c_n", "diplo_simplex"):
                entry = catalog_entry(name, n=4)
            else:
                entry = catalog_entry(name)
            config = build_catalog(entry)
            assert config.n == entry.n
            assert len(config.points) == entry.N
            expected = expected_max_cosine(name)
            if expected is not None:
                assert offdiag(gram_of(config)).max() == pytest.approx(
                    expected, abs=1e-12
                )

    def test_gram_round_trip_on_catalog(self):
        for name in balanced_entries():
            config = build_catalog(catalog_entry(name))
            g = gram_of(config)
            again = realize_from_gram(GramMatrix(g), config.n)
            assert np.abs(gram_of(again) - g).max() < 1e-9

    def test_unknown_entries(self):
        with pytest.raises(UnknownEntry):
            catalog_entry("nonsense")
        with pytest.raises(UnknownEntry):
            catalog_entry("ngon_N_2")
        with pytest.raises(UnknownEntry):
            catalog_entry("cell24_24_4", N=7)

    def test_600_cell(self):
        config = build_catalog(catalog_entry("cell600_120_4"))
        assert energy(config, Harmonic()) == pytest.approx(5395.0, abs=1e-9)
        g = gram_of(config)
        assert offdiag(g).max() == pytest.approx((1 + math.sqrt(5)) / 4, abs=1e-12)

    def test_pentagon_pair_matches_petersen_energy(self):
        pentagons = build_catalog(catalog_entry("pentagon_pair_10_4"))
        petersen = build_catalog(catalog_entry("petersen_10_4"))
        assert energy(pentagons, Harmonic()) == pytest.approx(
            energy(petersen, Harmonic()), abs=1e-9
        )

    def test_ngon_entry(self):
        config = build_catalog(catalog_entry("ngon_N_2", N=7))
        assert len(config.points) == 7
        assert config.n == 2
