"""Command-line front end.

Subcommands map one-to-one onto the library: build (catalog entries),
search (random-restart minimization), analyze (structure of a stored
configuration), screen (truncated-power challenge of a candidate
optimum), compare (rank stored configurations under one potential),
project (SVG plane projection), gaps (energy-level gap summary).

Exit codes: 0 success, 2 usage error, 3 data error.  All floating-point
output uses 12 decimal places, or 17 significant digits with --full.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import (
    design_strength,
    distance_spectrum,
    is_balanced,
    parameter_count,
    project_svg,
    recognize_value,
)
from .catalog import build_catalog, catalog_entry
from .errors import SphereCodesError
from .fileio import format_config, format_report, parse_config, parse_potential, read_report
from .search import compare_candidates, gap_statistics, run_search, universality_screen
from .symmetry import automorphism_group

DESIGN_DEGREE_CAP = 12


def _potential(text: str):
    try:
        return parse_potential(text.replace(":", " ").replace("=", " "))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _key_value(text: str):
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    try:
        return key, float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"parameter {key!r} needs a numeric value")


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _read_config_arg(path: str | None):
    return parse_config(_read_text(path))


def _write_out(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _formatter(args):
    if args.full:
        return lambda v: format(v, ".17g")

    def fixed(v: float) -> str:
        text = f"{v:.12f}"
        # a value that rounds to zero should not keep its sign
        return text.replace("-", "", 1) if float(text) == 0.0 else text

    return fixed


def _cmd_build(args) -> int:
    entry = catalog_entry(args.entry, **dict(args.param))
    _write_out(format_config(build_catalog(entry)), args.output)
    return 0


def _cmd_search(args) -> int:
    report = run_search(
        args.n, args.N, args.potential, args.trials, args.seed, jobs=args.jobs
    )
    if args.output is None or args.output == "-":
        # display rendering; files written with -o keep the canonical digits
        sys.stdout.write(format_report(report, _formatter(args)))
    else:
        _write_out(format_report(report), args.output)
    return 0


def _cmd_analyze(args) -> int:
    config = _read_config_arg(args.file)
    fmt = _formatter(args)
    chosen = [args.balanced, args.params, args.symmetry, args.design, args.spectrum, args.recognize]
    everything = not any(chosen)
    lines: list[str] = []
    if everything:
        lines.append(f"n {config.n} N {config.N}")
    if everything or args.balanced:
        lines.append("balanced: " + ("true" if is_balanced(config) else "false"))
    if everything or args.params:
        lines.append(f"parameters: {parameter_count(config)}")
    if everything or args.symmetry:
        group = automorphism_group(config)
        chiral = "unknown" if group.chiral is None else ("true" if group.chiral else "false")
        lines.append(f"order: {group.order}, chiral: {chiral}")
    if everything or args.design:
        lines.append(f"design strength: {design_strength(config, DESIGN_DEGREE_CAP)}")
    if everything or args.spectrum or args.recognize:
        spectrum = distance_spectrum(config)
        if everything or args.spectrum:
            lines.append("spectrum:")
            for cls in spectrum.classes:
                lines.append(f"  r2 {fmt(cls.representative)} count {cls.multiplicity}")
        if everything or args.recognize:
            lines.append("recognized:")
            for cls in spectrum.classes:
                cosine = 1.0 - cls.representative / 2.0
                lines.append(f"  cos {fmt(cosine)} = {recognize_value(cosine).describe()}")
    print("\n".join(lines))
    return 0


def _cmd_screen(args) -> int:
    config = _read_config_arg(args.file)
    fmt = _formatter(args)
    report = universality_screen(config, args.kmax, args.trials, args.seed, jobs=args.jobs)
    for entry in report.entries:
        print(
            f"k {entry.k} candidate {fmt(entry.candidate_energy)}"
            f" best {fmt(entry.best_found)} {entry.verdict}"
        )
    print(f"verdict: {report.verdict}")
    return 0


def _cmd_compare(args) -> int:
    fmt = _formatter(args)
    configs = [_read_config_arg(path) for path in args.files]
    for rank, (index, value) in enumerate(compare_candidates(configs, args.potential), start=1):
        print(f"{rank} {args.files[index]} {fmt(value)}")
    return 0


def _cmd_project(args) -> int:
    config = _read_config_arg(args.file)
    _write_out(project_svg(config, args.seed), args.output)
    return 0


def _cmd_gaps(args) -> int:
    fmt = _formatter(args)
    summary = gap_statistics(read_report(args.report))
    flagged = set(summary.flagged)
    print(f"levels {len(summary.levels)}")
    print(f"median spacing {fmt(summary.median_spacing)}")
    for i, gap in enumerate(summary.gaps):
        lo, hi = summary.levels[i], summary.levels[i + 1]
        marker = " large" if (lo, hi) in flagged else ""
        print(f"gap {fmt(lo)} -> {fmt(hi)} ratio {fmt(summary.ratios[i])}{marker}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--full", action="store_true", help="print 17 significant digits instead of 12 decimals"
    )
    parser = argparse.ArgumentParser(
        prog="spherecodes",
        description="search and analysis of minimal-energy point configurations on spheres",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="write a catalog configuration")
    p.add_argument("entry", help="catalog entry name")
    p.add_argument(
        "--param",
        action="append",
        type=_key_value,
        default=[],
        metavar="NAME=VALUE",
        help="parameter for parametric entries (repeatable)",
    )
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("search", parents=[common], help="random-restart energy minimization")
    p.add_argument("-n", type=int, required=True, help="ambient dimension")
    p.add_argument("-N", type=int, required=True, help="number of points")
    p.add_argument("--potential", type=_potential, required=True, help="harmonic | log | inverse_power:S | truncated_power:K")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True, help="master seed")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("-o", "--output", help="report file (default stdout)")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("analyze", parents=[common], help="structural analysis of a configuration")
    p.add_argument("file", nargs="?", help="configuration file (default stdin)")
    p.add_argument("--balanced", action="store_true")
    p.add_argument("--params", action="store_true")
    p.add_argument("--symmetry", action="store_true")
    p.add_argument("--design", action="store_true")
    p.add_argument("--spectrum", action="store_true")
    p.add_argument("--recognize", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("screen", parents=[common], help="truncated-power challenge of a candidate")
    p.add_argument("file", help="candidate configuration file")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--trials", type=int, required=True, help="trials per degree")
    p.add_argument("--seed", type=int, required=True, help="master seed")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_screen)

    p = sub.add_parser("compare", parents=[common], help="rank configurations under one potential")
    p.add_argument("files", nargs="+", help="configuration files")
    p.add_argument("--potential", type=_potential, required=True)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("project", parents=[common], help="SVG projection onto a seeded plane")
    p.add_argument("file", nargs="?", help="configuration file (default stdin)")
    p.add_argument("--seed", type=int, default=0, help="projection plane seed")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("gaps", parents=[common], help="energy-level gap summary of a report")
    p.add_argument("report", help="report file")
    p.set_defaults(func=_cmd_gaps)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except (SphereCodesError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
