"""Shared independent oracles for the test suite.

These deliberately re-derive everything with the most direct method
available (plain iteration, trial division, brute enumeration) so the
library is always checked against a second route.
"""

import math

import pytest


def naive_orbit(x, o=3, max_steps=10**6, max_value=2**128):
    """Reference walk: returns (values, colors, status, cycle)."""
    assert x >= 1
    values = [x]
    if x == 1:
        return values, "", "ReachedOne", None
    if x > max_value:
        return values, "", "ValueBoundExceeded", None
    seen = {x: 0}
    colors = []
    while True:
        if len(colors) == max_steps:
            return values, "".join(colors), "StepBoundExceeded", None
        cur = values[-1]
        nxt = o * cur + 1 if cur % 2 else cur // 2
        if nxt in seen:
            return values, "".join(colors), "CycleDetected", values[seen[nxt]:]
        if nxt > max_value:
            return values, "".join(colors), "ValueBoundExceeded", None
        colors.append("B" if cur % 2 else "R")
        values.append(nxt)
        seen[nxt] = len(values) - 1
        if nxt == 1:
            return values, "".join(colors), "ReachedOne", None


def trial_division_primes(limit):
    out = []
    for n in range(2, limit + 1):
        if all(n % d for d in range(2, math.isqrt(n) + 1)):
            out.append(n)
    return out


def brute_factorization(n):
    factors = {}
    d = 2
    while n > 1:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    return factors


def fib_list(count):
    fs = [0, 1, 1]
    while len(fs) <= count:
        fs.append(fs[-1] + fs[-2])
    return fs


@pytest.fixture(scope="session")
def kernel_backend():
    from collatzlab._backend import load_backend

    try:
        module, label = load_backend("c")
    except ImportError:
        pytest.skip("compiled backend not built")
    assert label == "c"
    return module


@pytest.fixture(scope="session")
def pure_backend():
    from collatzlab import _orbits_py

    return _orbits_py
