"""Named catalog of notable configurations.

Each entry records the dimension, size, any parameters, and a short rule
identifier, and can be built into a PointConfig.  Entries whose maximal
inner product has a known closed form carry it for verification, along
with a balancedness flag checked by the test suite.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .builders import (
    bisect_root,
    build_40_in_10,
    build_64_in_14_gram,
    build_96_in_9,
    build_c_n,
    build_cross_polytope,
    build_diplo_simplex,
    build_ngon,
    build_simplex,
    simplex_unit_vectors,
)
from .codes import build_nordstrom_robinson, cube_embed, shorten
from .energy import PointConfig
from .errors import UnknownEntry
from .gram import GramMatrix, build_gram_16_in_5, realize_from_gram
from .roots import (
    cell24_dual_vertices,
    cell24_vertices,
    cell600_vertices,
    dodecahedron_vertices,
    e6_coordinates,
    e6_dual_minimal,
    e6_roots,
    e7_coordinates,
    e7_dual_minimal,
    e7_roots,
    hs_second_subconstituent_gram,
    icosahedron_vertices,
    schlaefli_vectors,
)

__all__ = ["CatalogEntry", "catalog_entry", "catalog_names", "build_catalog"]


@dataclass(frozen=True)
class CatalogEntry:
    """A named configuration with its documented shape and parameters."""

    name: str
    n: int
    N: int
    parameters: dict[str, float] = field(default_factory=dict)
    rule: str = ""


def _edge_midpoint_rows(n: int) -> np.ndarray:
    u = simplex_unit_vectors(n + 1)
    rows = [u[i] + u[j] for i, j in itertools.combinations(range(n + 1), 2)]
    out = np.array(rows)
    return out / np.linalg.norm(out, axis=1, keepdims=True)


def _hemicube_rows(n: int) -> np.ndarray:
    rows = [
        signs
        for signs in itertools.product((1.0, -1.0), repeat=n)
        if sum(s < 0 for s in signs) % 2 == 0
    ]
    return np.array(rows) / math.sqrt(n)


def _torus_rows(moduli: tuple[float, float], steps: tuple[int, int], N: int) -> np.ndarray:
    k = np.arange(N)
    t1 = 2.0 * np.pi * steps[0] * k / N
    t2 = 2.0 * np.pi * steps[1] * k / N
    return np.column_stack(
        [
            moduli[0] * np.cos(t1),
            moduli[0] * np.sin(t1),
            moduli[1] * np.cos(t2),
            moduli[1] * np.sin(t2),
        ]
    )


def _build_petersen_10_4() -> PointConfig:
    return PointConfig.from_rows(_edge_midpoint_rows(4))


def _build_pentagon_pair_10_4() -> PointConfig:
    theta = 2.0 * np.pi * np.arange(5) / 5
    rows = np.zeros((10, 4))
    rows[:5, 0] = np.cos(theta)
    rows[:5, 1] = np.sin(theta)
    rows[5:, 2] = np.cos(theta)
    rows[5:, 3] = np.sin(theta)
    return PointConfig.from_rows(rows)


def _build_torus_13_4() -> PointConfig:
    s = 1.0 / math.sqrt(2.0)
    return PointConfig.from_rows(_torus_rows((s, s), (1, 5), 13))


def _build_log_torus_11_4() -> PointConfig:
    def octic(x: float) -> float:
        x2 = x * x
        return ((((5.0 * x2 - 36.0) * x2 + 51.0) * x2 - 4.0) * x2) - 7.0

    # octic(0) = -7 and octic(1) = 9, and the root in (0,1) is unique
    a = bisect_root(octic, 0.0, 1.0)
    return PointConfig.from_rows(
        _torus_rows((a, math.sqrt(1.0 - a * a)), (1, 4), 11)
    )


def _build_fifteen_15_4() -> PointConfig:
    g = build_gram_16_in_5(0.0, 0.0)
    sub = g.entries[1:, 1:]
    return realize_from_gram(GramMatrix(sub), 4)


def _build_hopf48_48_4() -> PointConfig:
    zeta = np.exp(1j * np.pi / 12.0)
    s = 1.0 / math.sqrt(2.0)
    seeds = [
        (1.0 + 0.0j, 0.0j),
        (0.0j, 1.0 + 0.0j),
        (s * zeta, s * zeta),
        (-s * zeta, s * zeta),
        (s * 1j * zeta**2, s * zeta**2),
        (-s * 1j * zeta**2, s * zeta**2),
    ]
    rows = []
    for k in range(8):
        phase = np.exp(1j * np.pi * k / 4.0)
        for z, w in seeds:
            rows.append([(phase * z).real, (phase * z).imag, (phase * w).real, (phase * w).imag])
    return PointConfig.from_rows(np.array(rows))


def _build_simplex_mid_face_21_5() -> PointConfig:
    u = simplex_unit_vectors(6)
    # facet centers of the simplex are the antipodes of its vertices
    return PointConfig.from_rows(np.vstack([_edge_midpoint_rows(5), -u]))


def _build_hemicube_16_5() -> PointConfig:
    return PointConfig.from_rows(_hemicube_rows(5))


def _build_signs_32_5() -> PointConfig:
    u = simplex_unit_vectors(6)
    rows = [u, -u]
    mixed = []
    for minus in itertools.combinations(range(6), 3):
        c = np.full(6, 1.0 / math.sqrt(5.0))
        c[list(minus)] *= -1.0
        mixed.append((5.0 / 6.0) * c @ u)
    rows.append(np.array(mixed))
    return PointConfig.from_rows(np.vstack(rows))


def _build_edge_mid_antipodes(n: int) -> PointConfig:
    mids = _edge_midpoint_rows(n)
    return PointConfig.from_rows(np.vstack([mids, -mids]))


def _build_cross_hemicube(n: int) -> PointConfig:
    eye = np.eye(n)
    return PointConfig.from_rows(np.vstack([eye, -eye, _hemicube_rows(n)]))


def _build_perm_hemicube_148_7() -> PointConfig:
    rows = []
    for i, j in itertools.combinations(range(7), 2):
        for si, sj in itertools.product((1.0, -1.0), repeat=2):
            r = np.zeros(7)
            r[i] = si
            r[j] = sj
            rows.append(r / math.sqrt(2.0))
    rows.extend(_hemicube_rows(7))
    out = np.array(rows)
    assert out.shape == (148, 7)
    return PointConfig.from_rows(out)


def _build_e6_union_126_6() -> PointConfig:
    shells = np.vstack(
        [
            e6_roots() / math.sqrt(2.0),
            e6_dual_minimal() / math.sqrt(4.0 / 3.0),
        ]
    )
    return PointConfig.from_rows(e6_coordinates(shells))


def _build_e7_union_182_7() -> PointConfig:
    shells = np.vstack(
        [
            e7_roots() / math.sqrt(2.0),
            e7_dual_minimal() / math.sqrt(1.5),
        ]
    )
    return PointConfig.from_rows(e7_coordinates(shells))


def _build_hs_subconstituent_42_14() -> PointConfig:
    return realize_from_gram(GramMatrix(hs_second_subconstituent_gram()), 14)


def _build_layered_74_5() -> PointConfig:
    height = math.sqrt(math.sqrt(5.0) - 2.0)
    radius = math.sqrt(1.0 - height * height)
    equator = cell24_vertices()
    dual = cell24_dual_vertices()
    rows = np.zeros((74, 5))
    rows[0, 4] = 1.0
    rows[1, 4] = -1.0
    rows[2:26, :4] = equator
    rows[26:50, :4] = radius * dual
    rows[26:50, 4] = height
    rows[50:74, :4] = radius * dual
    rows[50:74, 4] = -height
    return PointConfig.from_rows(rows)


def _build_icosa_dodeca_32_3() -> PointConfig:
    return PointConfig.from_rows(
        np.vstack([icosahedron_vertices(), dodecahedron_vertices()])
    )


def _build_cell24_24_4() -> PointConfig:
    return PointConfig.from_rows(cell24_vertices())


def _build_cell600_120_4() -> PointConfig:
    return PointConfig.from_rows(cell600_vertices())


def _build_code_128_15() -> PointConfig:
    return cube_embed(shorten(build_nordstrom_robinson(), 0, 0))


def _build_code_256_16() -> PointConfig:
    return cube_embed(build_nordstrom_robinson())


_SQRT5 = math.sqrt(5.0)

# name -> (n, N, builder, expected max cosine or None, balanced flag)
_FIXED = {
    "icosa_dodeca_32_3": (
        3,
        32,
        _build_icosa_dodeca_32_3,
        math.sqrt(75.0 + 30.0 * _SQRT5) / 15.0,
        True,
    ),
    "petersen_10_4": (4, 10, _build_petersen_10_4, 1.0 / 6.0, True),
    "pentagon_pair_10_4": (
        4,
        10,
        _build_pentagon_pair_10_4,
        (_SQRT5 - 1.0) / 4.0,
        True,
    ),
    "torus_13_4": (
        4,
        13,
        _build_torus_13_4,
        (math.cos(4.0 * math.pi / 13.0) + math.cos(6.0 * math.pi / 13.0)) / 2.0,
        True,
    ),
    "fifteen_15_4": (4, 15, _build_fifteen_15_4, 1.0 / math.sqrt(8.0), True),
    "cell24_24_4": (4, 24, _build_cell24_24_4, 0.5, True),
    "hopf48_48_4": (4, 48, _build_hopf48_48_4, 1.0 / math.sqrt(2.0), True),
    "cell600_120_4": (4, 120, _build_cell600_120_4, (1.0 + _SQRT5) / 4.0, True),
    "simplex_mid_face_21_5": (
        5,
        21,
        _build_simplex_mid_face_21_5,
        1.0 / math.sqrt(10.0),
        True,
    ),
    "hemicube_16_5": (5, 16, _build_hemicube_16_5, 0.2, True),
    "signs_32_5": (5, 32, _build_signs_32_5, 1.0 / math.sqrt(5.0), True),
    "layered_74_5": (5, 74, _build_layered_74_5, (_SQRT5 - 1.0) / 2.0, False),
    "edge_mid_antipodes_42_6": (6, 42, lambda: _build_edge_mid_antipodes(6), 0.4, True),
    "cross_hemicube_44_6": (
        6,
        44,
        lambda: _build_cross_hemicube(6),
        1.0 / math.sqrt(6.0),
        True,
    ),
    "schlaefli_27_6": (
        6,
        27,
        lambda: PointConfig.from_rows(schlaefli_vectors()),
        0.25,
        True,
    ),
    "e6_union_126_6": (6, 126, _build_e6_union_126_6, math.sqrt(3.0 / 8.0), True),
    "cross_hemicube_78_7": (7, 78, lambda: _build_cross_hemicube(7), 3.0 / 7.0, True),
    "perm_hemicube_148_7": (
        7,
        148,
        _build_perm_hemicube_148_7,
        math.sqrt(2.0 / 7.0),
        True,
    ),
    "e7_union_182_7": (7, 182, _build_e7_union_182_7, 1.0 / math.sqrt(3.0), True),
    "edge_mid_antipodes_72_8": (
        8,
        72,
        lambda: _build_edge_mid_antipodes(8),
        5.0 / 14.0,
        True,
    ),
    "code_96_9": (9, 96, build_96_in_9, 1.0 / 3.0, True),
    "code_40_10": (10, 40, build_40_in_10, 1.0 / 6.0, True),
    "log_torus_11_4": (4, 11, _build_log_torus_11_4, None, False),
    "code_64_14": (14, 64, build_64_in_14_gram, 1.0 / 7.0, True),
    "hs_subconstituent_42_14": (
        14,
        42,
        _build_hs_subconstituent_42_14,
        0.1,
        True,
    ),
    "code_128_15": (15, 128, _build_code_128_15, 0.2, True),
    "code_256_16": (16, 256, _build_code_256_16, 0.25, True),
}

_PARAMETRIC = {
    "ngon_N_2": ("N", lambda N: (2, N), build_ngon, True),
    "simplex": ("n", lambda n: (n, n + 1), build_simplex, True),
    "cross_polytope": ("n", lambda n: (n, 2 * n), build_cross_polytope, True),
    "c_n": ("n", lambda n: (n, 2 * n + 1), build_c_n, False),
    "diplo_simplex": ("n", lambda n: (n, 2 * n + 2), build_diplo_simplex, True),
}


def catalog_names() -> list[str]:
    return sorted(_FIXED) + sorted(_PARAMETRIC)


def catalog_entry(name: str, **parameters: float) -> CatalogEntry:
    """Resolve a catalog name (plus parameters where required) to an entry."""
    if name in _FIXED:
        if parameters:
            raise UnknownEntry(f"{name} takes no parameters")
        n, N, _, _, _ = _FIXED[name]
        return CatalogEntry(name=name, n=n, N=N, rule=name)
    if name in _PARAMETRIC:
        param, shape, _, _ = _PARAMETRIC[name]
        if set(parameters) != {param}:
            raise UnknownEntry(f"{name} requires exactly the parameter {param!r}")
        value = int(parameters[param])
        minimum = 2 if param == "n" else 2
        if value < minimum:
            raise UnknownEntry(f"{name}: {param} must be at least {minimum}")
        n, N = shape(value)
        return CatalogEntry(
            name=name, n=n, N=N, parameters={param: float(value)}, rule=name
        )
    raise UnknownEntry(name)


def build_catalog(entry: CatalogEntry) -> PointConfig:
    """Build the configuration described by a catalog entry."""
    if entry.name in _FIXED:
        n, N, builder, _, _ = _FIXED[entry.name]
        config = builder()
    elif entry.name in _PARAMETRIC:
        param, shape, builder, _ = _PARAMETRIC[entry.name]
        value = int(entry.parameters[param])
        n, N = shape(value)
        config = builder(value)
    else:
        raise UnknownEntry(entry.name)
    if config.n != n or len(config.points) != N:
        raise ArithmeticError(
            f"{entry.name}: built shape ({config.n}, {len(config.points)}) "
            f"does not match the documented ({n}, {N})"
        )
    return config


def expected_max_cosine(name: str) -> float | None:
    """Documented maximal inner product, when a closed form is known."""
    if name in _FIXED:
        return _FIXED[name][3]
    return None


def balanced_entries() -> list[str]:
    """Fixed entries documented as balanced."""
    return sorted(name for name, data in _FIXED.items() if data[4])
