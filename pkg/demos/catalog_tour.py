"""Walk the catalog of conjectured and proven optima and print their invariants.

For each named configuration: harmonic energy, balancedness, free parameter
count, design strength, and the automorphism group order. The heavy graph
entries are skipped by default; pass --all to include them.
"""

import argparse
import time

from spherecodes import Harmonic, energy
from spherecodes.analysis import design_strength, is_balanced, parameter_count
from spherecodes.catalog import build_catalog, catalog_entry, catalog_names
from spherecodes.symmetry import automorphism_group

# parameterized families need arguments; these are reasonable showcases
FAMILY_ARGS = {
    "simplex": {"n": 5},
    "cross_polytope": {"n": 5},
    "diplo_simplex": {"n": 4},
    "c_n": {"n": 4},
    "ngon_N_2": {"N": 7},
}

SLOW = {"code_128_15", "code_256_16", "perm_hemicube_148_7", "e7_union_182_7"}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--all", action="store_true", help="include the slow entries")
    args = ap.parse_args()

    print(f"{'name':<24} {'n':>2} {'N':>3} {'energy':>16}  bal  params  design  order")
    for name in catalog_names():
        if name in SLOW and not args.all:
            continue
        entry = catalog_entry(name, **FAMILY_ARGS.get(name, {}))
        t0 = time.perf_counter()
        config = build_catalog(entry)
        e = energy(config, Harmonic())
        bal = is_balanced(config).balanced
        params = parameter_count(config)
        strength = design_strength(config, 8)
        order = automorphism_group(config).order
        dt = time.perf_counter() - t0
        print(
            f"{name:<24} {config.n:>2} {config.N:>3} {e:16.6f}"
            f"  {'y' if bal else 'n'}  {params:6d}  {strength:6d}  {order}"
            + (f"   ({dt:.1f}s)" if dt > 2 else "")
        )


if __name__ == "__main__":
    main()
