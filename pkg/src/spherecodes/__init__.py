"""Minimal-energy point configurations on unit spheres.

Library for building, optimizing, and analyzing finite point sets on
S^(n-1): pair-potential energies and their Riemannian derivatives,
gradient-descent search with Newton polishing, explicit constructions of
notable codes, and structural analysis (balancedness, symmetry, design
strength, exact-value recognition).
"""

from .energy import (
    PointConfig,
    InversePower,
    Harmonic,
    TruncatedPower,
    Logarithmic,
    Potential,
    TangentVector,
    HessianSpectrum,
    energy,
    pair_squared_distances,
    riemannian_gradient,
    riemannian_hessian_spectrum,
)
from .descent import (
    DescentSettings,
    DescentResult,
    gradient_descent,
    newton_polish,
    random_config,
)
from .gram import (
    GramMatrix,
    realize_from_gram,
    build_gram_16_in_5,
    build_gram_12_in_4_family1,
    build_gram_12_in_4_family2,
)
from .codes import BinaryCode, build_nordstrom_robinson, shorten, cube_embed
from .builders import (
    build_simplex,
    build_cross_polytope,
    build_ngon,
    build_c_n,
    build_diplo_simplex,
    perturb_diplo_simplex,
    build_40_in_10,
    build_40_in_10_competitor,
    build_64_in_14_gram,
    build_96_in_9,
)
from .catalog import CatalogEntry, catalog_entry, catalog_names, build_catalog
from .analysis import (
    DistanceSpectrum,
    BalanceReport,
    HopfImage,
    ExactValue,
    distance_spectrum,
    is_balanced,
    parameter_count,
    design_strength,
    hopf_map,
    recognize_value,
    project_svg,
)
from .symmetry import (
    SymmetryReport,
    RealizedAutomorphism,
    automorphism_group,
    realize_automorphism,
)
from .search import (
    LocalMinimumRecord,
    GapSummary,
    SearchReport,
    ScreenReport,
    mix_seed,
    run_search,
    gap_statistics,
    universality_screen,
    compare_candidates,
)
from .fileio import (
    read_config,
    write_config,
    parse_config,
    format_config,
    read_report,
    write_report,
    parse_report,
    format_report,
    fixture_path,
)

__version__ = "0.1.0"
