"""Regenerate the reference data files shipped under spherecodes/data.

Two of the files are tables of published reference energies (local minima
of the harmonic energy found in large random-restart campaigns, far larger
than anything run in the test suite).  The third is a point configuration
that is too rare to find by random restarts at desk scale: the global
optimum for 27 points in R^6 with one point replaced by its antipode and
re-equilibrated.  That construction is deterministic, so the file can be
rebuilt from scratch here.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from spherecodes.analysis import is_balanced, parameter_count
from spherecodes.catalog import build_catalog, catalog_entry
from spherecodes.descent import DescentSettings, gradient_descent
from spherecodes.energy import Harmonic, PointConfig, energy
from spherecodes.fileio import format_config, format_report, parse_config
from spherecodes.search import DEDUP_TOL, LocalMinimumRecord, SearchReport
from spherecodes.symmetry import automorphism_group

DATA = Path(__file__).resolve().parent.parent / "src" / "spherecodes" / "data"

# Local minima for 27 points in R^6, harmonic potential.  Counts are out of
# 10^8 random trials; the parameter count and symmetry order of each level
# are reproduced by this package's own analysis of the found minima.
MINIMA_27_6 = [
    (111.0000000000, 99971504, 0, 51840),
    (112.6145815185, 653, 9, 120),
    (112.6420995468, 22993, 18, 24),
    (112.7360209988, 10, 2, 1920),
    (112.8896851626, 4840, 13, 48),
]

# Thirty lowest harmonic energy levels for 120 points in R^4, with counts
# out of 2 * 10^5 random trials.  Higher levels are omitted, so the counts
# do not sum to the trial total.
MINIMA_120_4 = [
    (5395.000000, 186418),
    (5398.650556, 4393),
    (5398.687876, 2356),
    (5400.842726, 18),
    (5400.880057, 149),
    (5400.890460, 47),
    (5400.894513, 26),
    (5400.928674, 25),
    (5400.936106, 41),
    (5400.940237, 28),
    (5400.940550, 7),
    (5400.943094, 38),
    (5402.029556, 7),
    (5402.088248, 3),
    (5402.093726, 10),
    (5402.116636, 1),
    (5402.152619, 1),
    (5402.213231, 2),
    (5402.366164, 1),
    (5402.922701, 1),
    (5403.091064, 111),
    (5403.115123, 1),
    (5403.129076, 108),
    (5403.271100, 66),
    (5403.319898, 157),
    (5403.326719, 84),
    (5403.347209, 24),
    (5403.455701, 7),
    (5403.462898, 8),
    (5403.488923, 4),
]


def _table_report(n, N, trials, rows):
    records = []
    for row in rows:
        if len(row) == 4:
            e, count, params, order = row
        else:
            e, count = row
            params = order = None
        records.append(
            LocalMinimumRecord(
                energy=e,
                config=None,
                count=count,
                parameters=params,
                balanced=None,
                symmetry_order=order,
                seeds=(),
            )
        )
    return SearchReport(
        n=n,
        N=N,
        potential=Harmonic(),
        trials=trials,
        master_seed=0,
        records=tuple(records),
        unconverged=0,
        dedup_tolerance=DEDUP_TOL,
    )


def write_tables():
    DATA.mkdir(exist_ok=True)
    header = "# reference energy levels; counts are out of the stated trial total\n"
    path = DATA / "reference_minima_27_6.txt"
    path.write_text(header + format_report(_table_report(6, 27, 10**8, MINIMA_27_6)))
    print("wrote", path)
    header = (
        "# thirty lowest reference energy levels out of the stated trial total;\n"
        "# higher levels omitted, so record counts do not sum to trials\n"
    )
    path = DATA / "reference_minima_120_4.txt"
    path.write_text(header + format_report(_table_report(4, 120, 2 * 10**5, MINIMA_120_4)))
    print("wrote", path)


def write_flipped_schlaefli():
    cfg = build_catalog(catalog_entry("schlaefli_27_6"))
    pts = cfg.points.copy()
    pts[0] *= -1.0
    result = gradient_descent(PointConfig.from_rows(pts), Harmonic(), DescentSettings(), seed=0)
    if not result.converged:
        raise RuntimeError("flip-and-equilibrate did not converge")
    # one parse/format pass so the stored text is its own canonical form
    canon = parse_config(format_config(result.config))
    path = DATA / "flipped_schlaefli_27_6.txt"
    path.write_text(format_config(canon))
    e = energy(canon, Harmonic())
    print("wrote", path)
    print(
        f"  energy {e:.13f}  parameters {parameter_count(canon)}"
        f"  balanced {bool(is_balanced(canon))}"
        f"  symmetry order {automorphism_group(canon).order}"
    )


if __name__ == "__main__":
    write_tables()
    write_flipped_schlaefli()
