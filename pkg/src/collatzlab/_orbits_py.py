"""Pure-Python scan backend.

Same contract as the compiled backend in _orbits.pyx: scan_chunk() walks
every start in [lo, hi) and returns per-start statistics in numpy arrays.
Values are tracked only while they fit the unsigned 64-bit window; an
orbit that leaves the window under a soft cap (max_value above 2**64) is
flagged ST_RETRY and must be recomputed by the caller with big integers.
"""

from __future__ import annotations

import numpy as np

U64_MAX = 2**64 - 1

ST_REACHED_ONE = 0
ST_CYCLE = 1
ST_VALUE_BOUND = 2
ST_STEP_BOUND = 3
ST_RETRY = 4


def _walk(x, o, max_steps, vcap, soft):
    if x == 1:
        return ST_REACHED_ONE, 0, 0, 0, 1, 1
    if x > vcap:
        if soft:
            return ST_RETRY, 0, 0, 0, 0, 0
        return ST_VALUE_BOUND, 0, 0, 0, x, x
    seen = {x}
    cur = x
    steps = blue = red = 0
    peak = minv = x
    while True:
        if steps == max_steps:
            return ST_STEP_BOUND, steps, blue, red, peak, minv
        nxt = o * cur + 1 if cur & 1 else cur >> 1
        if nxt in seen:
            return ST_CYCLE, steps, blue, red, peak, minv
        if nxt > vcap:
            if soft:
                return ST_RETRY, 0, 0, 0, 0, 0
            return ST_VALUE_BOUND, steps, blue, red, peak, minv
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
            return ST_REACHED_ONE, steps, blue, red, peak, minv


def scan_chunk(lo, hi, o, max_steps, max_value):
    """Per-start orbit stats for starts lo..hi-1.

    Returns (status, steps, blue, red, peak, minv, retry) where the first
    six are numpy arrays indexed by start-lo and retry lists the starts
    flagged ST_RETRY.
    """
    n = hi - lo
    status = np.empty(n, dtype=np.int8)
    steps_a = np.empty(n, dtype=np.int64)
    blue_a = np.empty(n, dtype=np.int64)
    red_a = np.empty(n, dtype=np.int64)
    peak_a = np.empty(n, dtype=np.uint64)
    min_a = np.empty(n, dtype=np.uint64)
    soft = max_value > U64_MAX
    vcap = U64_MAX if soft else max_value
    retry = []
    for i in range(n):
        st, steps, blue, red, peak, minv = _walk(lo + i, o, max_steps, vcap, soft)
        if st == ST_RETRY:
            retry.append(lo + i)
        status[i] = st
        steps_a[i] = steps
        blue_a[i] = blue
        red_a[i] = red
        peak_a[i] = peak
        min_a[i] = minv
    return status, steps_a, blue_a, red_a, peak_a, min_a, retry
