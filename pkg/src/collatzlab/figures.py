"""Numeric series emitters with CSV round-trip.

Each figure is a FigureSeries: named columns, rows sorted by the leading
x column.  CSV files are UTF-8 with a header row, comma separated, '.'
decimals; exact rationals are written both as p/q text and as a decimal
column so plots and exact re-checks are both served.
"""

from __future__ import annotations

import csv
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import scanner as scan_mod
from .asymptotics import golden_gap, growth_log, phi_ratio
from .core import DEFAULT_LIMITS, OrbitLimits
from .paths import edge_counts, edge_quotient

FIGURE_NAMES = ("succ", "rb", "quotient", "table1")

_INT_RE = re.compile(r"[+-]?\d+$")
_FRACTION_RE = re.compile(r"[+-]?\d+/\d+$")

RATIO_CUTOFF = Fraction(5, 8)


@dataclass(frozen=True)
class FigureSeries:
    name: str
    headers: tuple[str, ...]
    rows: tuple[tuple, ...]

    def __post_init__(self) -> None:
        xs = [row[0] for row in self.rows]
        if xs != sorted(xs) or len(set(xs)) != len(xs):
            raise ValueError("rows must be sorted by x with no duplicates")
        if any(len(row) != len(self.headers) for row in self.rows):
            raise ValueError("row width must match headers")

    def to_csv(self, path: str | Path) -> Path:
        path = Path(path)
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(self.headers)
            for row in self.rows:
                writer.writerow([_format_cell(cell) for cell in row])
        return path

    @classmethod
    def from_csv(cls, path: str | Path, name: str | None = None) -> "FigureSeries":
        path = Path(path)
        with path.open(newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            headers = tuple(next(reader))
            rows = tuple(tuple(_parse_cell(cell) for cell in row) for row in reader)
        return cls(name or path.stem, headers, rows)


def _format_cell(cell) -> str:
    if isinstance(cell, bool):
        raise TypeError("boolean cells are not part of the format")
    if isinstance(cell, (int, Fraction)):
        return str(cell)
    if isinstance(cell, float):
        return repr(cell)
    return str(cell)


def _parse_cell(text: str):
    if _INT_RE.fullmatch(text):
        return int(text)
    if _FRACTION_RE.fullmatch(text):
        return Fraction(text)
    try:
        return float(text)
    except ValueError:
        return text


def table1_series(n_max: int = 7) -> FigureSeries:
    """Per-depth red/blue edge counts with the blue/red quotient as printed
    (depth 0 has no edges and an undefined quotient, shown as '-')."""
    rows = []
    for n in range(n_max + 1):
        census = edge_counts(n)
        if n == 0:
            rows.append((0, 0, 0, "-", ""))
        else:
            q = edge_quotient(n)
            rows.append((n, census.red_edges, census.blue_edges, q, float(q)))
    return FigureSeries(
        "table1",
        ("iteration", "red_edges", "blue_edges", "quotient_br", "quotient_dec"),
        tuple(rows),
    )


def succ_series(n_max: int = 90) -> FigureSeries:
    """Log-domain growth sequence against the reference line y=1 (log 0)."""
    rows = tuple((n, growth_log(n), 0.0) for n in range(1, n_max + 1))
    return FigureSeries("succ", ("n", "growth_log", "log_one"), rows)


def rb_series(n_max: int = 90) -> FigureSeries:
    """Consecutive-Fibonacci ratios with the first four ratios and log2(3)
    as horizontal references."""
    refs = tuple(float(phi_ratio(k).value) for k in range(1, 5))
    log_ratio = math.log(3) / math.log(2)
    rows = []
    for n in range(1, n_max + 1):
        value = phi_ratio(n).value
        rows.append((n, value, float(value)) + refs + (log_ratio,))
    return FigureSeries(
        "rb",
        ("n", "phi_frac", "phi", "ref_phi1", "ref_phi2", "ref_phi3", "ref_phi4",
         "ref_log2_3"),
        tuple(rows),
    )


def quotient_series(
    b: int = 150000,
    o: int = 3,
    limits: OrbitLimits = DEFAULT_LIMITS,
    threads: int | None = None,
    backend=None,
) -> FigureSeries:
    """Per-start blue/red quotients for 1..b (starts with no red step are
    skipped) against the 5/8 reference line."""
    cutoff = float(RATIO_CUTOFF)
    rows = tuple(
        (x, Fraction(blue, red), blue / red, cutoff)
        for x, blue, red in scan_mod.ratio_rows(1, b, o, limits, threads, backend)
    )
    return FigureSeries("quotient", ("x", "ratio_frac", "ratio", "ref_5_8"), rows)


def golden_gap_series(n_max: int = 90) -> FigureSeries:
    rows = tuple((n, golden_gap(n)) for n in range(1, n_max + 1))
    return FigureSeries("golden_gap", ("n", "gap"), rows)


def histogram_series(summary: scan_mod.ScanSummary) -> FigureSeries:
    """Blue/red quotient histogram of a scan (bin width 1/128 on [0, 1))."""
    bins = scan_mod.HISTOGRAM_BINS
    rows = tuple(
        (Fraction(i, bins), Fraction(i + 1, bins), count)
        for i, count in enumerate(summary.histogram)
    )
    return FigureSeries("ratio_histogram", ("bin_low", "bin_high", "count"), rows)


_BUILDERS = {
    "succ": succ_series,
    "rb": rb_series,
    "quotient": quotient_series,
    "table1": table1_series,
}


def emit_figure(name: str, out: str | Path | None = None, **params) -> FigureSeries:
    """Build the named figure series and optionally write it as CSV."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown figure {name!r}; expected one of {FIGURE_NAMES}") from None
    series = builder(**params)
    if out is not None:
        series.to_csv(out)
    return series
