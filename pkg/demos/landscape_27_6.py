"""Desk-scale tour of the 27-point energy landscape on S^5.

Runs a few hundred random-restart descents under the harmonic potential,
prints the energy levels found with their basin frequencies, and analyzes
the best configuration. The true landscape has five known levels; the
rarest two need far more trials than a demo should burn, so expect to see
two or three here.
"""

import argparse

from spherecodes import Harmonic
from spherecodes.analysis import is_balanced, parameter_count
from spherecodes.search import gap_statistics, run_search
from spherecodes.symmetry import automorphism_group


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=400)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    print(f"searching: 27 points on S^5, harmonic potential, {args.trials} trials")
    report = run_search(6, 27, Harmonic(), args.trials, master_seed=args.seed)

    print(f"\n{'energy':>18}  {'count':>6}  {'freq':>7}  params  order")
    for rec in report.records:
        freq = rec.count / report.trials
        print(
            f"{rec.energy:18.10f}  {rec.count:6d}  {freq:7.4f}"
            f"  {rec.parameters:6d}  {rec.symmetry_order:5d}"
        )
    if report.unconverged:
        print(f"unconverged trials: {report.unconverged}")

    best = report.records[0]
    bal = is_balanced(best.config)
    print(f"\nbest level {best.energy:.10f}:")
    print(f"  balanced: {bal.balanced}")
    print(f"  free parameters: {parameter_count(best.config)}")
    print(f"  symmetry order: {automorphism_group(best.config).order}")

    if len(report.records) >= 3:
        gaps = gap_statistics(report)
        print(f"\nmedian level spacing: {gaps.median_spacing:.6f}")
        for lo, hi in gaps.flagged:
            print(f"  large gap: {lo:.10f} -> {hi:.10f}")
    else:
        print("\ntoo few levels for gap statistics at this trial count")


if __name__ == "__main__":
    main()
