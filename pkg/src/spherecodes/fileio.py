"""Plain-text formats for configurations and search reports.

Configuration files: a header line `n N` followed by N coordinate rows,
printed with 17 significant digits so float64 values survive a decimal
round trip.  Report files: a key-value header followed by one block per
energy level.  Writing what was read reproduces the text byte for byte.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .energy import (
    Harmonic,
    InversePower,
    Logarithmic,
    PointConfig,
    Potential,
    TruncatedPower,
)
from .errors import NotOnSphere, ParseError
from .search import LocalMinimumRecord, SearchReport

__all__ = [
    "read_config",
    "write_config",
    "format_config",
    "parse_config",
    "read_report",
    "write_report",
    "format_report",
    "parse_report",
    "potential_label",
    "parse_potential",
    "fixture_path",
]

RENORM_TOL = 1e-9

_DATA_DIR = Path(__file__).resolve().parent / "data"


def fixture_path(name: str) -> Path:
    """Locate one of the reference data files shipped with the package."""
    path = _DATA_DIR / name
    if not path.is_file():
        known = ", ".join(sorted(p.name for p in _DATA_DIR.glob("*.txt")))
        raise FileNotFoundError(f"no fixture {name!r}; shipped files: {known}")
    return path


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def potential_label(potential: Potential) -> str:
    if isinstance(potential, Harmonic):
        return "harmonic"
    if isinstance(potential, InversePower):
        return f"inverse_power {_fmt(potential.exponent)}"
    if isinstance(potential, TruncatedPower):
        return f"truncated_power {potential.degree}"
    if isinstance(potential, Logarithmic):
        return "log"
    raise TypeError(f"unsupported potential {potential!r}")


def parse_potential(label: str) -> Potential:
    parts = label.split()
    if parts == ["harmonic"]:
        return Harmonic()
    if parts == ["log"]:
        return Logarithmic()
    if len(parts) == 2 and parts[0] == "inverse_power":
        return InversePower(float(parts[1]))
    if len(parts) == 2 and parts[0] == "truncated_power":
        return TruncatedPower(int(parts[1]))
    raise ValueError(f"unknown potential {label!r}")


def format_config(config: PointConfig) -> str:
    out = [f"{config.n} {config.N}"]
    for row in config.points:
        out.append(" ".join(_fmt(v) for v in row))
    return "\n".join(out) + "\n"


def parse_config(text: str) -> PointConfig:
    lines = text.splitlines()
    cursor = 0

    def next_line() -> tuple[int, str]:
        nonlocal cursor
        while cursor < len(lines):
            cursor += 1
            stripped = lines[cursor - 1].strip()
            if stripped and not stripped.startswith("#"):
                return cursor, stripped
        raise ParseError(len(lines), "unexpected end of file")

    lineno, header = next_line()
    fields = header.split()
    if len(fields) != 2:
        raise ParseError(lineno, "header must be two integers: n N")
    try:
        n, N = int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(lineno, "header must be two integers: n N") from None
    if n < 1 or N < 1:
        raise ParseError(lineno, "header dimensions must be positive")
    rows = np.empty((N, n))
    for i in range(N):
        lineno, line = next_line()
        parts = line.split()
        if len(parts) != n:
            raise ParseError(lineno, f"expected {n} coordinates, found {len(parts)}")
        try:
            rows[i] = [float(p) for p in parts]
        except ValueError:
            raise ParseError(lineno, "coordinate is not a number") from None
    norms = np.linalg.norm(rows, axis=1)
    worst = int(np.argmax(np.abs(norms - 1.0)))
    if abs(norms[worst] - 1.0) >= RENORM_TOL:
        raise NotOnSphere(worst, float(norms[worst]))
    return PointConfig.from_rows(rows)


def read_config(path) -> PointConfig:
    with open(path, "r", encoding="ascii") as handle:
        return parse_config(handle.read())


def write_config(config: PointConfig, path) -> None:
    with open(path, "w", encoding="ascii") as handle:
        handle.write(format_config(config))


def _record_lines(record: LocalMinimumRecord, out: list[str], fmt=_fmt) -> None:
    out.append(f"energy {fmt(record.energy)}")
    out.append(f"count {record.count}")
    out.append("parameters " + ("none" if record.parameters is None else str(record.parameters)))
    if record.balanced is None:
        out.append("balanced none")
    else:
        out.append("balanced " + ("true" if record.balanced else "false"))
    out.append(
        "symmetry_order "
        + ("none" if record.symmetry_order is None else str(record.symmetry_order))
    )
    out.append(("seeds " + " ".join(str(s) for s in record.seeds)).rstrip())
    if record.config is None:
        out.append("config none")
    else:
        out.append(f"config {record.config.n} {record.config.N}")
        for row in record.config.points:
            out.append(" ".join(_fmt(v) for v in row))


def format_report(report: SearchReport, float_format=_fmt) -> str:
    """Render a report; float_format controls scalar fields, not coordinates."""
    out = [
        f"n {report.n}",
        f"N {report.N}",
        f"potential {potential_label(report.potential)}",
        f"trials {report.trials}",
        f"master_seed {report.master_seed}",
        f"dedup_tolerance {float_format(report.dedup_tolerance)}",
        f"unconverged {report.unconverged}",
        f"records {len(report.records)}",
    ]
    for k, record in enumerate(report.records):
        out.append(f"record {k + 1}")
        _record_lines(record, out, float_format)
    return "\n".join(out) + "\n"


class _Reader:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.cursor = 0

    def next(self) -> tuple[int, str]:
        while self.cursor < len(self.lines):
            self.cursor += 1
            stripped = self.lines[self.cursor - 1].strip()
            if stripped and not stripped.startswith("#"):
                return self.cursor, stripped
        raise ParseError(len(self.lines), "unexpected end of file")

    def key(self, expected: str) -> str:
        lineno, line = self.next()
        head, _, rest = line.partition(" ")
        if head != expected:
            raise ParseError(lineno, f"expected {expected!r}, found {head!r}")
        return rest.strip()


def parse_report(text: str) -> SearchReport:
    reader = _Reader(text)
    try:
        n = int(reader.key("n"))
        N = int(reader.key("N"))
        potential = parse_potential(reader.key("potential"))
        trials = int(reader.key("trials"))
        master_seed = int(reader.key("master_seed"))
        dedup = float(reader.key("dedup_tolerance"))
        unconverged = int(reader.key("unconverged"))
        count = int(reader.key("records"))
        records = []
        for k in range(count):
            tag = reader.key("record")
            if tag != str(k + 1):
                raise ParseError(reader.cursor, f"records out of order at {tag!r}")
            e = float(reader.key("energy"))
            occurrences = int(reader.key("count"))
            params_text = reader.key("parameters")
            params = None if params_text == "none" else int(params_text)
            bal_text = reader.key("balanced")
            balanced = None if bal_text == "none" else bal_text == "true"
            order_text = reader.key("symmetry_order")
            order = None if order_text == "none" else int(order_text)
            seed_text = reader.key("seeds")
            seeds = tuple(int(s) for s in seed_text.split()) if seed_text else ()
            shape = reader.key("config")
            if shape == "none":
                config = None
            else:
                cn, cN = (int(v) for v in shape.split())
                rows = np.empty((cN, cn))
                for i in range(cN):
                    lineno, line = reader.next()
                    parts = line.split()
                    if len(parts) != cn:
                        raise ParseError(lineno, f"expected {cn} coordinates")
                    rows[i] = [float(p) for p in parts]
                config = PointConfig.from_rows(rows)
            records.append(
                LocalMinimumRecord(
                    energy=e,
                    config=config,
                    count=occurrences,
                    parameters=params,
                    balanced=balanced,
                    symmetry_order=order,
                    seeds=seeds,
                )
            )
    except ValueError as exc:
        raise ParseError(reader.cursor, str(exc)) from None
    return SearchReport(
        n=n,
        N=N,
        potential=potential,
        trials=trials,
        master_seed=master_seed,
        records=tuple(records),
        unconverged=unconverged,
        dedup_tolerance=dedup,
    )


def read_report(path) -> SearchReport:
    with open(path, "r", encoding="ascii") as handle:
        return parse_report(handle.read())


def write_report(report: SearchReport, path) -> None:
    with open(path, "w", encoding="ascii") as handle:
        handle.write(format_report(report))
