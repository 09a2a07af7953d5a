import numpy as np
import pytest

from collatzlab.core import OrbitLimits, OrbitStatus, orbit, orbit_stats
from collatzlab.scanner import ratio_extrema, ratio_rows, scan

DEFAULT = OrbitLimits()
FIVE_X = OrbitLimits(max_steps=10**4, max_value=10**6)


def assert_chunks_equal(a, b):
    for i in range(6):
        assert np.array_equal(a[i], b[i]), f"array {i} differs"
    assert a[6] == b[6]


@pytest.mark.parametrize(
    "lo,hi,o,max_steps,max_value",
    [
        (1, 3000, 3, 10**6, 2**128),
        (1, 3000, 3, 10**6, 2**64 - 1),
        (1, 1500, 5, 10**4, 10**6),
        (1, 600, 5, 10**4, 2**128),
        (1, 300, 7, 700, 2**128),
        (13, 14, 5, 9, 2**64 - 1),
        (13, 14, 5, 10, 2**64 - 1),
        (13, 14, 5, 15, 2**64 - 1),  # budget between cycle closure and Brent's detection
        (1, 600, 5, 12, 2**64 - 1),
        (1, 600, 5, 60, 2**64 - 1),
        (1, 200, 3, 25, 2**128),
        (100, 121, 3, 10, 50),  # every start already above the value cap
    ],
)
def test_backends_agree(kernel_backend, pure_backend, lo, hi, o, max_steps, max_value):
    a = kernel_backend.scan_chunk(lo, hi, o, max_steps, max_value)
    b = pure_backend.scan_chunk(lo, hi, o, max_steps, max_value)
    assert_chunks_equal(a, b)


def test_pure_backend_matches_streaming_walker(pure_backend):
    # third route: the big-integer walker from core
    lo, hi, o = 1, 400, 5
    limits = FIVE_X
    status, steps, blue, red, peak, minv, retry = pure_backend.scan_chunk(
        lo, hi, o, limits.max_steps, limits.max_value)
    assert retry == []
    codes = {OrbitStatus.REACHED_ONE: 0, OrbitStatus.CYCLE_DETECTED: 1,
             OrbitStatus.VALUE_BOUND_EXCEEDED: 2, OrbitStatus.STEP_BOUND_EXCEEDED: 3}
    for i, x in enumerate(range(lo, hi)):
        st = orbit_stats(x, o, limits)
        assert status[i] == codes[st.status]
        assert steps[i] == st.steps
        assert (blue[i], red[i]) == (st.blue, st.red)
        assert (peak[i], minv[i]) == (st.peak, st.min_element)


def test_kernel_flags_oversized_orbits_for_retry(kernel_backend):
    # 5x+1 orbits quickly escape uint64 when the cap allows it
    status, *_rest, retry = kernel_backend.scan_chunk(7, 8, 5, 10**6, 2**128)
    assert retry == [7]
    assert status[0] == 4


def test_scan_smoke():
    from fractions import Fraction

    s = scan(1, 10000)
    assert s.status_counts[OrbitStatus.REACHED_ONE] == 10000
    assert sum(s.status_counts.values()) == s.orbit_count == 10000
    assert ratio_extrema(s) == (Fraction(41, 70), 27)


def test_scan_ratio_argmax_is_reproducible():
    s = scan(1, 10000)
    ratio, argmax = ratio_extrema(s)
    rec = orbit(argmax)
    assert ratio == pytest.approx(rec.blue_count / rec.red_count)
    assert ratio.numerator * rec.red_count == ratio.denominator * rec.blue_count


def test_scan_single_start_one():
    s = scan(1, 1)
    assert s.status_counts[OrbitStatus.REACHED_ONE] == 1
    assert s.max_ratio is None and s.ratio_argmax is None
    assert s.ratio_undefined == 1
    assert s.max_peak == 1 and s.peak_argmax == 1
    assert s.max_stopping_time == 0
    with pytest.raises(ValueError):
        ratio_extrema(s)


def test_scan_rejects_bad_ranges():
    with pytest.raises(ValueError):
        scan(5, 4)
    with pytest.raises(ValueError):
        scan(0, 10)
    with pytest.raises(ValueError):
        scan(1, 10, o=4)


def test_scan_five_x_census():
    s = scan(1, 2000, o=5, limits=FIVE_X)
    assert sum(s.status_counts.values()) == 2000
    assert s.status_counts[OrbitStatus.CYCLE_DETECTED] > 0
    assert s.status_counts[OrbitStatus.VALUE_BOUND_EXCEEDED] > 0


def test_scan_thread_count_does_not_change_result():
    reference = scan(1, 30000, threads=1)
    for threads in (2, 5, 8):
        other = scan(1, 30000, threads=threads)
        assert other == reference
        assert repr(other) == repr(reference)


def test_scan_backends_give_identical_summaries():
    for kwargs in ({"o": 3}, {"o": 5, "limits": FIVE_X}):
        py = scan(1, 5000, backend="python", **kwargs)
        default = scan(1, 5000, **kwargs)
        assert py == default


def test_scan_bignum_starts_bypass_chunk_backends():
    base = 2**63 + 1
    s = scan(base, base + 40, o=3, limits=OrbitLimits(max_steps=5000, max_value=2**128))
    assert sum(s.status_counts.values()) == 41
    assert s.status_counts[OrbitStatus.REACHED_ONE] == 41
    st = orbit_stats(base, 3, OrbitLimits(max_steps=5000, max_value=2**128))
    assert s.max_peak >= st.peak > 2**63


def test_scan_kernel_retry_path_agrees_with_pure():
    # o=5 with a huge cap: most orbits leave uint64 and come back as retries
    limits = OrbitLimits(max_steps=10**4, max_value=2**96)
    a = scan(1, 400, o=5, limits=limits, backend="c") if _has_kernel() else None
    b = scan(1, 400, o=5, limits=limits, backend="python")
    if a is not None:
        assert a == b
    assert sum(b.status_counts.values()) == 400


def _has_kernel():
    try:
        from collatzlab._backend import load_backend

        load_backend("c")
        return True
    except ImportError:
        return False


def test_histogram_accounts_for_every_defined_ratio():
    s = scan(1, 8192)
    total = sum(s.histogram) + s.ratio_ge_one + s.ratio_undefined
    assert total == s.orbit_count
    assert s.ratio_undefined == 1  # only the zero-step start 1


def test_histogram_bin_placement():
    s = scan(27, 27)
    # 41/70 falls in bin floor(128 * 41 / 70) = 74
    assert s.histogram[74] == 1
    assert sum(s.histogram) == 1
    assert s.max_ratio is not None and s.ratio_argmax == 27


def test_ratio_rows_skips_undefined():
    rows = ratio_rows(1, 100)
    assert len(rows) == 99
    assert rows[0][0] == 2
    assert [r[0] for r in rows] == sorted(r[0] for r in rows)
    by_x = {x: (blue, red) for x, blue, red in rows}
    assert by_x[27] == (41, 70)


def test_ratio_rows_backends_agree():
    assert ratio_rows(1, 3000, threads=3) == ratio_rows(1, 3000, backend="python", threads=1)


def test_thread_default_env_override(monkeypatch):
    from collatzlab import scanner

    monkeypatch.setenv("COLLATZLAB_THREADS", "3")
    assert scanner.default_threads() == 3
    monkeypatch.delenv("COLLATZLAB_THREADS")
    assert scanner.default_threads() >= 1
