"""Parallel orbit-range scanner with a deterministic merge.

Starts are processed in fixed-size chunks; each chunk produces a partial
summary and partial summaries merge through an associative, commutative
operation (extrema ties break toward the smaller start), so the result is
identical for any thread count and any completion order.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import core
from ._backend import DEFAULT_BACKEND, load_backend
from .core import DEFAULT_LIMITS, OrbitLimits, OrbitStatus, _check_multiplier, _check_start

CHUNK_SIZE = 4096
HISTOGRAM_BINS = 128

# starts and multipliers beyond this window skip the chunk backends and go
# straight to the big-integer walker
_KERNEL_START_CAP = 2**62
_KERNEL_MULT_CAP = 2**32

_STATUS_ORDER = (
    OrbitStatus.REACHED_ONE,
    OrbitStatus.CYCLE_DETECTED,
    OrbitStatus.VALUE_BOUND_EXCEEDED,
    OrbitStatus.STEP_BOUND_EXCEEDED,
)
_RETRY_CODE = 4


@dataclass(frozen=True)
class ScanSummary:
    """Aggregate orbit statistics over a contiguous start range."""

    a: int
    b: int
    multiplier: int
    limits: OrbitLimits
    status_counts: dict[OrbitStatus, int]
    max_ratio: Fraction | None
    ratio_argmax: int | None
    max_peak: int
    peak_argmax: int
    max_stopping_time: int
    stopping_argmax: int
    histogram: tuple[int, ...]
    ratio_ge_one: int
    ratio_undefined: int

    @property
    def orbit_count(self) -> int:
        return self.b - self.a + 1


class _Accumulator:
    """Mutable partial summary; add per-orbit stats, then merge and freeze."""

    __slots__ = ("counts", "best_blue", "best_red", "best_x", "peak", "peak_x",
                 "stop", "stop_x", "hist", "ge_one", "undefined")

    def __init__(self) -> None:
        self.counts = [0, 0, 0, 0]
        self.best_blue = 0
        self.best_red = 1
        self.best_x: int | None = None
        self.peak = -1
        self.peak_x: int | None = None
        self.stop = -1
        self.stop_x: int | None = None
        self.hist = [0] * HISTOGRAM_BINS
        self.ge_one = 0
        self.undefined = 0

    def add(self, x: int, status_code: int, steps: int, blue: int, red: int,
            peak: int, minv: int) -> None:
        self.counts[status_code] += 1
        if peak > self.peak or (peak == self.peak and x < self.peak_x):
            self.peak = peak
            self.peak_x = x
        if steps > self.stop or (steps == self.stop and x < self.stop_x):
            self.stop = steps
            self.stop_x = x
        if red == 0:
            self.undefined += 1
            return
        if blue * self.best_red > self.best_blue * red or (
            blue * self.best_red == self.best_blue * red
            and (self.best_x is None or x < self.best_x)
        ):
            self.best_blue, self.best_red, self.best_x = blue, red, x
        if blue >= red:
            self.ge_one += 1
        else:
            self.hist[(HISTOGRAM_BINS * blue) // red] += 1

    def add_stats(self, x: int, stats: core.OrbitStats) -> None:
        self.add(x, _STATUS_ORDER.index(stats.status), stats.steps, stats.blue,
                 stats.red, stats.peak, stats.min_element)

    def merge(self, other: "_Accumulator") -> None:
        for i in range(4):
            self.counts[i] += other.counts[i]
        if other.best_x is not None:
            if self.best_x is None:
                self.best_blue, self.best_red, self.best_x = (
                    other.best_blue, other.best_red, other.best_x)
            else:
                lhs = other.best_blue * self.best_red
                rhs = self.best_blue * other.best_red
                if lhs > rhs or (lhs == rhs and other.best_x < self.best_x):
                    self.best_blue, self.best_red, self.best_x = (
                        other.best_blue, other.best_red, other.best_x)
        if other.peak_x is not None:
            if other.peak > self.peak or (other.peak == self.peak and other.peak_x < self.peak_x):
                self.peak = other.peak
                self.peak_x = other.peak_x
        if other.stop_x is not None:
            if other.stop > self.stop or (other.stop == self.stop and other.stop_x < self.stop_x):
                self.stop = other.stop
                self.stop_x = other.stop_x
        for i in range(HISTOGRAM_BINS):
            self.hist[i] += other.hist[i]
        self.ge_one += other.ge_one
        self.undefined += other.undefined

    def freeze(self, a: int, b: int, o: int, limits: OrbitLimits) -> ScanSummary:
        return ScanSummary(
            a=a,
            b=b,
            multiplier=o,
            limits=limits,
            status_counts={st: self.counts[i] for i, st in enumerate(_STATUS_ORDER)},
            max_ratio=None if self.best_x is None else Fraction(self.best_blue, self.best_red),
            ratio_argmax=self.best_x,
            max_peak=self.peak,
            peak_argmax=self.peak_x,
            max_stopping_time=self.stop,
            stopping_argmax=self.stop_x,
            histogram=tuple(self.hist),
            ratio_ge_one=self.ge_one,
            ratio_undefined=self.undefined,
        )


def default_threads() -> int:
    env = os.environ.get("COLLATZLAB_THREADS")
    if env:
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def _chunk_backend_usable(hi: int, o: int, backend) -> bool:
    return backend is not None and hi <= _KERNEL_START_CAP and o <= _KERNEL_MULT_CAP


def _scan_chunk_acc(lo: int, hi: int, o: int, limits: OrbitLimits, backend) -> _Accumulator:
    acc = _Accumulator()
    if _chunk_backend_usable(hi, o, backend):
        status, steps, blue, red, peak, minv, retry = backend.scan_chunk(
            lo, hi, o, limits.max_steps, limits.max_value)
        add = acc.add
        st_l = status.tolist()
        steps_l = steps.tolist()
        blue_l = blue.tolist()
        red_l = red.tolist()
        peak_l = peak.tolist()
        min_l = minv.tolist()
        for i in range(hi - lo):
            if st_l[i] != _RETRY_CODE:
                add(lo + i, st_l[i], steps_l[i], blue_l[i], red_l[i], peak_l[i], min_l[i])
        for x in retry:
            acc.add_stats(x, core.orbit_stats(x, o, limits))
    else:
        for x in range(lo, hi):
            acc.add_stats(x, core.orbit_stats(x, o, limits))
    return acc


def scan(
    a: int,
    b: int,
    o: int = 3,
    limits: OrbitLimits = DEFAULT_LIMITS,
    threads: int | None = None,
    backend=None,
) -> ScanSummary:
    """Aggregate orbit statistics for every start in [a, b].

    backend may be 'c', 'python', a module with scan_chunk(), or None for
    the default selection.  The summary is identical for any thread count.
    """
    _check_start(a)
    _check_multiplier(o)
    if b < a:
        raise ValueError(f"empty range [{a}, {b}]")
    if threads is None:
        threads = default_threads()
    backend = _resolve_backend(backend)

    spans = [(lo, min(lo + CHUNK_SIZE, b + 1)) for lo in range(a, b + 1, CHUNK_SIZE)]
    total = _Accumulator()
    if threads <= 1 or len(spans) == 1:
        for lo, hi in spans:
            total.merge(_scan_chunk_acc(lo, hi, o, limits, backend))
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_scan_chunk_acc, lo, hi, o, limits, backend)
                       for lo, hi in spans]
            for fut in futures:
                total.merge(fut.result())
    return total.freeze(a, b, o, limits)


def _resolve_backend(backend):
    if backend is None:
        return DEFAULT_BACKEND
    if isinstance(backend, str):
        return load_backend(backend)[0]
    return backend


def ratio_extrema(summary: ScanSummary) -> tuple[Fraction, int]:
    """Largest exact blue/red quotient in the scan and the start attaining it.

    Zero-step orbits (the start 1, and any orbit stopped before a red
    step) have no quotient and are excluded.
    """
    if summary.max_ratio is None or summary.ratio_argmax is None:
        raise ValueError("no orbit in the scan has a defined blue/red quotient")
    return summary.max_ratio, summary.ratio_argmax


def ratio_rows(
    a: int,
    b: int,
    o: int = 3,
    limits: OrbitLimits = DEFAULT_LIMITS,
    threads: int | None = None,
    backend=None,
) -> list[tuple[int, int, int]]:
    """Per-start (x, blue, red) rows for x in [a, b], skipping undefined
    quotients (red = 0).  Row order follows x."""
    _check_start(a)
    _check_multiplier(o)
    if b < a:
        raise ValueError(f"empty range [{a}, {b}]")
    if threads is None:
        threads = default_threads()
    backend = _resolve_backend(backend)

    def one_span(span: tuple[int, int]) -> list[tuple[int, int, int]]:
        lo, hi = span
        rows: list[tuple[int, int, int]] = []
        if _chunk_backend_usable(hi, o, backend):
            status, _steps, blue, red, _peak, _minv, _retry = backend.scan_chunk(
                lo, hi, o, limits.max_steps, limits.max_value)
            blue_l = blue.tolist()
            red_l = red.tolist()
            st_l = status.tolist()
            for i in range(hi - lo):
                x = lo + i
                if st_l[i] == _RETRY_CODE:
                    st = core.orbit_stats(x, o, limits)
                    if st.red > 0:
                        rows.append((x, st.blue, st.red))
                elif red_l[i] > 0:
                    rows.append((x, blue_l[i], red_l[i]))
        else:
            for x in range(lo, hi):
                st = core.orbit_stats(x, o, limits)
                if st.red > 0:
                    rows.append((x, st.blue, st.red))
        return rows

    spans = [(lo, min(lo + CHUNK_SIZE, b + 1)) for lo in range(a, b + 1, CHUNK_SIZE)]
    out: list[tuple[int, int, int]] = []
    if threads <= 1 or len(spans) == 1:
        for span in spans:
            out.extend(one_span(span))
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for rows in pool.map(one_span, spans):
                out.extend(rows)
    return out
