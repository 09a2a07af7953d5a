"""Generalized hailstone map, orbit iteration, and parity-colored step records.

The map sends an odd positive integer x to o*x+1 and an even one to x/2,
for an odd multiplier o >= 3 (o=3 is the classic map).  Every step gets a
color: BLUE when the source value was odd, RED when it was even.  An orbit
runs until it reaches 1, revisits a value (cycle), or trips one of the
configured bounds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

DEFAULT_MAX_STEPS = 10**6
DEFAULT_MAX_VALUE = 2**128


class EdgeColor(enum.Enum):
    """Step color: RED marks a halving step, BLUE an o*x+1 step."""

    RED = "R"
    BLUE = "B"


class OrbitStatus(enum.Enum):
    REACHED_ONE = "ReachedOne"
    CYCLE_DETECTED = "CycleDetected"
    VALUE_BOUND_EXCEEDED = "ValueBoundExceeded"
    STEP_BOUND_EXCEEDED = "StepBoundExceeded"


@dataclass(frozen=True)
class OrbitLimits:
    """Abort bounds: at most max_steps recorded steps, values capped at max_value.

    A step whose result would exceed max_value is not recorded; the orbit
    stops with VALUE_BOUND_EXCEEDED at the last in-bounds value.
    """

    max_steps: int = DEFAULT_MAX_STEPS
    max_value: int = DEFAULT_MAX_VALUE

    def __post_init__(self) -> None:
        if self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")
        if self.max_value < 2:
            raise ValueError("max_value must be >= 2")


DEFAULT_LIMITS = OrbitLimits()


class OrbitStats(NamedTuple):
    """Streaming orbit summary (no value/color retention)."""

    status: OrbitStatus
    steps: int
    blue: int
    red: int
    peak: int
    min_element: int


@dataclass(frozen=True)
class OrbitRecord:
    """Full trajectory of one start, values and step colors included.

    colors[i] is the color of the step leaving values[i]; hence
    blue_count + red_count == len(values) - 1.  When a cycle is detected
    the closing step back into the cycle is not recorded, so values holds
    each visited value exactly once and cycle is the repeating suffix.
    """

    start: int
    multiplier: int
    values: tuple[int, ...]
    colors: str
    blue_count: int
    red_count: int
    peak: int
    min_element: int
    status: OrbitStatus
    cycle: tuple[int, ...] | None = None

    @property
    def steps(self) -> int:
        return self.blue_count + self.red_count


def _check_start(x: int) -> None:
    if x < 1:
        raise ValueError(f"orbit start must be a positive integer, got {x}")


def _check_multiplier(o: int) -> None:
    if o < 3 or o % 2 == 0:
        raise ValueError(f"multiplier must be an odd integer >= 3, got {o}")


def step(x: int, o: int = 3) -> int:
    """One map application: o*x+1 if x is odd, x//2 if x is even."""
    _check_start(x)
    _check_multiplier(o)
    return o * x + 1 if x & 1 else x >> 1


def orbit(x: int, o: int = 3, limits: OrbitLimits = DEFAULT_LIMITS) -> OrbitRecord:
    """Iterate the map from x, recording every value and step color.

    Stops at the first of: value 1 reached, a previously seen value about
    to recur (cycle), a step result above limits.max_value, or
    limits.max_steps recorded steps.  Deterministic for fixed inputs.
    """
    _check_start(x)
    _check_multiplier(o)
    values = [x]
    colors: list[str] = []
    blue = red = 0
    peak = minv = x

    def done(status: OrbitStatus, cycle: tuple[int, ...] | None = None) -> OrbitRecord:
        return OrbitRecord(
            start=x,
            multiplier=o,
            values=tuple(values),
            colors="".join(colors),
            blue_count=blue,
            red_count=red,
            peak=peak,
            min_element=minv,
            status=status,
            cycle=cycle,
        )

    if x == 1:
        return done(OrbitStatus.REACHED_ONE)
    if x > limits.max_value:
        return done(OrbitStatus.VALUE_BOUND_EXCEEDED)

    seen = {x: 0}
    cur = x
    while True:
        if len(colors) == limits.max_steps:
            return done(OrbitStatus.STEP_BOUND_EXCEEDED)
        nxt = o * cur + 1 if cur & 1 else cur >> 1
        if nxt in seen:
            return done(OrbitStatus.CYCLE_DETECTED, cycle=tuple(values[seen[nxt]:]))
        if nxt > limits.max_value:
            return done(OrbitStatus.VALUE_BOUND_EXCEEDED)
        colors.append("B" if cur & 1 else "R")
        if cur & 1:
            blue += 1
        else:
            red += 1
        values.append(nxt)
        seen[nxt] = len(values) - 1
        if nxt > peak:
            peak = nxt
        elif nxt < minv:
            minv = nxt
        cur = nxt
        if nxt == 1:
            return done(OrbitStatus.REACHED_ONE)


def orbit_stats(
    x: int,
    o: int = 3,
    limits: OrbitLimits = DEFAULT_LIMITS,
    method: str = "set",
) -> OrbitStats:
    """Like orbit() but streaming: counters only, no value retention.

    method="set" keeps a visited set (memory grows with orbit length);
    method="brent" is constant-memory cycle detection that reproduces the
    exact same record, at the cost of re-walking the orbit once a cycle
    is found.
    """
    _check_start(x)
    _check_multiplier(o)
    if method == "set":
        return _stats_by_set(x, o, limits)
    if method == "brent":
        return _stats_by_brent(x, o, limits)
    raise ValueError(f"unknown cycle detection method: {method!r}")


def _stats_by_set(x: int, o: int, limits: OrbitLimits) -> OrbitStats:
    if x == 1:
        return OrbitStats(OrbitStatus.REACHED_ONE, 0, 0, 0, 1, 1)
    if x > limits.max_value:
        return OrbitStats(OrbitStatus.VALUE_BOUND_EXCEEDED, 0, 0, 0, x, x)
    seen = {x}
    cur = x
    steps = blue = red = 0
    peak = minv = x
    while True:
        if steps == limits.max_steps:
            return OrbitStats(OrbitStatus.STEP_BOUND_EXCEEDED, steps, blue, red, peak, minv)
        nxt = o * cur + 1 if cur & 1 else cur >> 1
        if nxt in seen:
            return OrbitStats(OrbitStatus.CYCLE_DETECTED, steps, blue, red, peak, minv)
        if nxt > limits.max_value:
            return OrbitStats(OrbitStatus.VALUE_BOUND_EXCEEDED, steps, blue, red, peak, minv)
        if cur & 1:
            blue += 1
        else:
            red += 1
        steps += 1
        seen.add(nxt)
        if nxt > peak:
            peak = nxt
        elif nxt < minv:
            minv = nxt
        cur = nxt
        if nxt == 1:
            return OrbitStats(OrbitStatus.REACHED_ONE, steps, blue, red, peak, minv)


def _stats_by_brent(x: int, o: int, limits: OrbitLimits) -> OrbitStats:
    # Constant-memory twin of _stats_by_set.  A cycle first recurs at step
    # mu+lam-1 (mu = preperiod, lam = cycle length); Brent's search may
    # overshoot that point, so counters are normalized by a final re-walk.
    max_steps, max_value = limits.max_steps, limits.max_value
    if x == 1:
        return OrbitStats(OrbitStatus.REACHED_ONE, 0, 0, 0, 1, 1)
    if x > max_value:
        return OrbitStats(OrbitStatus.VALUE_BOUND_EXCEEDED, 0, 0, 0, x, x)

    def advance(v: int) -> int:
        return o * v + 1 if v & 1 else v >> 1

    cur = x
    tort = x
    steps = blue = red = 0
    lam, power = 0, 1
    peak = minv = x
    lam_found = None
    while True:
        if steps == max_steps:
            break  # cycle may still close below max_steps; keep searching
        if lam == power:
            tort = cur
            power <<= 1
            lam = 0
        nxt = advance(cur)
        if nxt > max_value:
            return OrbitStats(OrbitStatus.VALUE_BOUND_EXCEEDED, steps, blue, red, peak, minv)
        if cur & 1:
            blue += 1
        else:
            red += 1
        steps += 1
        lam += 1
        cur = nxt
        if cur > peak:
            peak = cur
        elif cur < minv:
            minv = cur
        if cur == 1:
            return OrbitStats(OrbitStatus.REACHED_ONE, steps, blue, red, peak, minv)
        if cur == tort:
            lam_found = lam
            break

    snapshot = OrbitStats(OrbitStatus.STEP_BOUND_EXCEEDED, steps, blue, red, peak, minv)
    if lam_found is None:
        # extension: cycle search only, counters frozen at max_steps
        budget = 3 * max_steps + 64
        while budget > 0:
            if lam == power:
                tort = cur
                power <<= 1
                lam = 0
            nxt = advance(cur)
            if nxt > max_value:
                return snapshot
            lam += 1
            budget -= 1
            cur = nxt
            if cur == tort:
                lam_found = lam
                break
        if lam_found is None:
            return snapshot

    # normalize: locate the cycle start, then re-walk to the first recurrence
    h = x
    for _ in range(lam_found):
        h = advance(h)
    t = x
    mu = 0
    while t != h:
        t = advance(t)
        h = advance(h)
        mu += 1
    closure = mu + lam_found - 1
    if closure >= limits.max_steps:
        return snapshot
    v = x
    blue = red = 0
    peak = minv = x
    for _ in range(closure):
        if v & 1:
            blue += 1
        else:
            red += 1
        v = advance(v)
        if v > peak:
            peak = v
        elif v < minv:
            minv = v
    return OrbitStats(OrbitStatus.CYCLE_DETECTED, closure, blue, red, peak, minv)


def orbit_min(record: OrbitRecord) -> int:
    """Minimal element of the orbit (the start value included)."""
    return record.min_element


def blue_red_ratio(record: OrbitRecord | OrbitStats) -> Fraction | None:
    """Exact blue/red step quotient; None when no red step was taken."""
    blue = record.blue_count if isinstance(record, OrbitRecord) else record.blue
    red = record.red_count if isinstance(record, OrbitRecord) else record.red
    if red == 0:
        return None
    return Fraction(blue, red)
