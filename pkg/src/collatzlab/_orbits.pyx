# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan backend.

Walks every start of a chunk in unsigned 64-bit arithmetic with
constant-memory (Brent) cycle detection, releasing the GIL so chunks can
run on real threads.  Orbits that leave the 64-bit window under a soft
value cap are flagged ST_RETRY for a big-integer recomputation by the
caller.  Semantics match _orbits_py.scan_chunk exactly.
"""

import numpy as np

from libc.stdint cimport int8_t, int64_t, uint64_t

ST_REACHED_ONE = 0
ST_CYCLE = 1
ST_VALUE_BOUND = 2
ST_STEP_BOUND = 3
ST_RETRY = 4

cdef enum:
    C_ONE = 0
    C_CYCLE = 1
    C_VALUE = 2
    C_STEP = 3
    C_RETRY = 4

cdef uint64_t U64_MAX_C = <uint64_t>0xFFFFFFFFFFFFFFFFULL

U64_MAX = 2**64 - 1


cdef struct Stats:
    int status
    int64_t steps
    int64_t blue
    int64_t red
    uint64_t peak
    uint64_t minv


cdef inline uint64_t _advance(uint64_t x, uint64_t o) noexcept nogil:
    if x & 1:
        return o * x + 1
    return x >> 1


cdef void _walk(uint64_t x0, uint64_t o, int64_t max_steps, uint64_t vcap,
                bint soft, uint64_t odd_limit, Stats* out) noexcept nogil:
    # odd_limit = (vcap - 1) // o, so cur > odd_limit  <=>  o*cur + 1 > vcap,
    # checked before multiplying to keep every product inside uint64.
    cdef uint64_t cur, nxt, tort, t, h, peak, minv
    cdef int64_t steps = 0, blue = 0, red = 0, lam = 0, power = 1
    cdef int64_t mu, closure, budget, i, lam_found = -1
    cdef int64_t snap_steps, snap_blue, snap_red
    cdef uint64_t snap_peak, snap_minv

    if x0 == 1:
        out.status = C_ONE
        out.steps = 0; out.blue = 0; out.red = 0
        out.peak = 1; out.minv = 1
        return
    if x0 > vcap:
        if soft:
            out.status = C_RETRY
            out.steps = 0; out.blue = 0; out.red = 0; out.peak = 0; out.minv = 0
        else:
            out.status = C_VALUE
            out.steps = 0; out.blue = 0; out.red = 0
            out.peak = x0; out.minv = x0
        return

    cur = x0
    tort = x0
    peak = x0
    minv = x0
    while True:
        if steps == max_steps:
            break
        if lam == power:
            tort = cur
            power <<= 1
            lam = 0
        if cur & 1:
            if cur > odd_limit:
                if soft:
                    out.status = C_RETRY
                    out.steps = 0; out.blue = 0; out.red = 0; out.peak = 0; out.minv = 0
                else:
                    out.status = C_VALUE
                    out.steps = steps; out.blue = blue; out.red = red
                    out.peak = peak; out.minv = minv
                return
            nxt = o * cur + 1
            blue += 1
        else:
            nxt = cur >> 1
            red += 1
        steps += 1
        lam += 1
        cur = nxt
        if cur > peak:
            peak = cur
        elif cur < minv:
            minv = cur
        if cur == 1:
            out.status = C_ONE
            out.steps = steps; out.blue = blue; out.red = red
            out.peak = peak; out.minv = minv
            return
        if cur == tort:
            lam_found = lam
            break

    # counters frozen here: either the step budget is exhausted (cycle may
    # still close at an earlier index than Brent noticed) or a cycle was hit.
    snap_steps = steps; snap_blue = blue; snap_red = red
    snap_peak = peak; snap_minv = minv

    if lam_found < 0:
        budget = 3 * max_steps + 64
        while budget > 0:
            if lam == power:
                tort = cur
                power <<= 1
                lam = 0
            if cur & 1:
                if cur > odd_limit:
                    break  # beyond max_steps: answer is the step-bound snapshot
                cur = o * cur + 1
            else:
                cur = cur >> 1
            lam += 1
            budget -= 1
            if cur == tort:
                lam_found = lam
                break
        if lam_found < 0:
            out.status = C_STEP
            out.steps = snap_steps; out.blue = snap_blue; out.red = snap_red
            out.peak = snap_peak; out.minv = snap_minv
            return

    # cycle length lam_found; find the preperiod, then re-walk to the first
    # recurrence (mu + lam - 1 recorded steps under visited-set semantics)
    h = x0
    for i in range(lam_found):
        h = _advance(h, o)
    t = x0
    mu = 0
    while t != h:
        t = _advance(t, o)
        h = _advance(h, o)
        mu += 1
    closure = mu + lam_found - 1
    if closure >= max_steps:
        out.status = C_STEP
        out.steps = snap_steps; out.blue = snap_blue; out.red = snap_red
        out.peak = snap_peak; out.minv = snap_minv
        return
    t = x0
    blue = 0; red = 0
    peak = x0; minv = x0
    for i in range(closure):
        if t & 1:
            blue += 1
        else:
            red += 1
        t = _advance(t, o)
        if t > peak:
            peak = t
        elif t < minv:
            minv = t
    out.status = C_CYCLE
    out.steps = closure; out.blue = blue; out.red = red
    out.peak = peak; out.minv = minv


def scan_chunk(lo, hi, o, max_steps, max_value):
    """Per-start orbit stats for starts lo..hi-1; see _orbits_py.scan_chunk."""
    if hi <= lo:
        raise ValueError("empty chunk")
    if hi - 1 > U64_MAX or o > U64_MAX:
        raise OverflowError("chunk range or multiplier outside the uint64 window")
    cdef int64_t n = hi - lo
    status = np.empty(n, dtype=np.int8)
    steps_a = np.empty(n, dtype=np.int64)
    blue_a = np.empty(n, dtype=np.int64)
    red_a = np.empty(n, dtype=np.int64)
    peak_a = np.empty(n, dtype=np.uint64)
    min_a = np.empty(n, dtype=np.uint64)
    cdef int8_t[::1] st_v = status
    cdef int64_t[::1] steps_v = steps_a
    cdef int64_t[::1] blue_v = blue_a
    cdef int64_t[::1] red_v = red_a
    cdef uint64_t[::1] peak_v = peak_a
    cdef uint64_t[::1] min_v = min_a

    soft_py = max_value > U64_MAX
    vcap_py = U64_MAX if soft_py else max_value
    cdef bint soft = soft_py
    cdef uint64_t vcap = vcap_py
    cdef uint64_t c_lo = lo
    cdef uint64_t c_o = o
    cdef int64_t c_ms = max_steps
    cdef uint64_t odd_limit = (vcap - 1) // c_o
    cdef Stats s
    cdef int64_t i

    with nogil:
        for i in range(n):
            _walk(c_lo + <uint64_t>i, c_o, c_ms, vcap, soft, odd_limit, &s)
            st_v[i] = <int8_t>s.status
            steps_v[i] = s.steps
            blue_v[i] = s.blue
            red_v[i] = s.red
            peak_v[i] = s.peak
            min_v[i] = s.minv

    retry = [lo + int(i) for i in np.flatnonzero(status == ST_RETRY)]
    return status, steps_a, blue_a, red_a, peak_a, min_a, retry
