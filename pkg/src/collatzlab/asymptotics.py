"""Fibonacci-indexed growth sequences, golden-ratio gaps, and path-sum limits.

The central object is the weight 3**F(n) / 2**F(n+1) carried by depth-n
levels of the step tree (blue edges contribute powers of the multiplier,
red edges powers of 2), together with the consecutive-Fibonacci ratios
that control whether the geometric path sums converge.
"""

from __future__ import annotations

import enum
import math
import warnings
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import NamedTuple

_LN2 = math.log(2)
_LN3 = math.log(3)

# exact big-integer comparison is used while 2**F(n+1) stays this small
EXACT_COMPARISON_BIT_CAP = 10**6

_fib_cache = [0, 1, 1]


def fib(n: int) -> int:
    """Fibonacci number with F(1) = F(2) = 1.  n must be >= 1."""
    if n < 1:
        raise ValueError("Fibonacci index starts at 1")
    while len(_fib_cache) <= n:
        _fib_cache.append(_fib_cache[-1] + _fib_cache[-2])
    return _fib_cache[n]


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class PhiRatio(NamedTuple):
    n: int
    value: Fraction


class LimitResult(NamedTuple):
    converges: bool
    value: float | None


class ConvergenceThreshold(NamedTuple):
    value: float
    exceeds_max_phi: bool


def growth_log(n: int) -> float:
    """Natural log of 3**F(n) / 2**F(n+1)."""
    if n < 1:
        raise ValueError("index starts at 1")
    return fib(n) * _LN3 - fib(n + 1) * _LN2


def growth_vs_inverse(n: int, method: str = "auto") -> Ordering:
    """Exact comparison of 3**F(n) / 2**F(n+1) against 1/n.

    Equivalent to comparing n * 3**F(n) with 2**F(n+1).  Small indices are
    decided with exact big integers; beyond the exact cap a log-domain
    comparison is used, escalating back to exact if the margin is within
    floating-point noise.
    """
    if n < 1:
        raise ValueError("index starts at 1")
    if method not in ("auto", "exact", "log"):
        raise ValueError(f"unknown method {method!r}")
    if method == "exact" or (method == "auto" and fib(n + 1) <= EXACT_COMPARISON_BIT_CAP):
        return _compare_exact(n)
    lhs = fib(n) * _LN3 + math.log(n)
    rhs = fib(n + 1) * _LN2
    margin = abs(lhs - rhs)
    noise = 1e-12 * max(lhs, rhs, 1.0)
    if method == "auto" and margin <= noise:
        return _compare_exact(n)
    if margin <= noise:
        raise ArithmeticError(f"log-domain comparison indecisive at n={n}")
    return Ordering.GREATER if lhs > rhs else Ordering.LESS


def _compare_exact(n: int) -> Ordering:
    lhs = n * 3 ** fib(n)
    rhs = 2 ** fib(n + 1)
    if lhs > rhs:
        return Ordering.GREATER
    if lhs < rhs:
        return Ordering.LESS
    return Ordering.EQUAL


def growth_crossover(n_max: int = 90) -> int:
    """First index from which the growth term stays below 1/n through n_max.

    The below-1/n claim fails for small n, so the honest statement is a
    crossover report: returns the smallest n* such that the comparison is
    LESS for every n in [n*, n_max].
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    crossover = n_max + 1
    for n in range(n_max, 0, -1):
        if growth_vs_inverse(n) is Ordering.LESS:
            crossover = n
        else:
            break
    return crossover


def phi_ratio(n: int) -> PhiRatio:
    """Consecutive-Fibonacci ratio F(n+1)/F(n), exact."""
    if n < 1:
        raise ValueError("index starts at 1")
    return PhiRatio(n, Fraction(fib(n + 1), fib(n)))


def path_sum(j: int, x: float, phi: float, o: int = 3) -> float:
    """Geometric sum over a depth-j path bundle with halving exponent phi.

    Evaluates sum_{i=1}^{j-1} o**(i-1) / 2**(i*phi) + (o**(j-1) / 2**(j*phi)) * x
    term by term and through the closed form
    (1/o) * 2**(-phi*j) * (o**j * x + (o * 2**(j*phi) - o**j * 2**phi) / (2**phi - o)),
    and requires the two to agree to 1e-9 relative.  At the singular
    exponent phi = log2(o) the closed form has a vanishing denominator;
    the term-by-term value is returned and a RuntimeWarning is issued.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    if phi <= 0:
        raise ValueError("phi must be positive")
    series = math.fsum(o ** (i - 1) / 2 ** (i * phi) for i in range(1, j))
    series += (o ** (j - 1) / 2 ** (j * phi)) * x
    denom = 2**phi - o
    if abs(denom) < 1e-6 * o:
        warnings.warn(
            f"closed form singular near phi = log2({o}); returning the series value",
            RuntimeWarning,
            stacklevel=2,
        )
        return series
    closed = (1.0 / o) * 2 ** (-phi * j) * (o**j * x + (o * 2 ** (j * phi) - o**j * 2**phi) / denom)
    if not math.isclose(series, closed, rel_tol=1e-9, abs_tol=1e-12):
        raise ArithmeticError(
            f"series and closed form disagree: {series!r} vs {closed!r} "
            f"(j={j}, x={x}, phi={phi}, o={o})"
        )
    return series


def path_sum_limit(phi: float, o: int = 3) -> LimitResult:
    """Limit of path_sum as j grows: 1/(2**phi - o) when phi > log2(o), else divergent."""
    if phi <= 0:
        raise ValueError("phi must be positive")
    if phi > math.log(o) / _LN2:
        return LimitResult(True, 1.0 / (2**phi - o))
    return LimitResult(False, None)


def convergence_threshold(o: int) -> ConvergenceThreshold:
    """Halving exponent log2(o) needed for path sums with multiplier o to converge.

    exceeds_max_phi reports whether the threshold is above 2, the largest
    value F(n+1)/F(n) ever takes; when it is, no Fibonacci ratio meets the
    threshold and the corresponding path sums diverge.
    """
    if o < 3 or o % 2 == 0:
        raise ValueError(f"multiplier must be an odd integer >= 3, got {o}")
    value = math.log(o) / _LN2
    return ConvergenceThreshold(value, value > 2)


def golden_gap(n: int) -> float:
    """|F(n)/F(n+1) - (sqrt(5)-1)/2|, evaluated in 80-digit decimals.

    Double precision cannot resolve the gap beyond n of about 38; the
    decimal evaluation keeps the sequence strictly decreasing through the
    whole supported range before the float conversion.
    """
    if n < 1:
        raise ValueError("index starts at 1")
    with localcontext() as ctx:
        ctx.prec = 80
        target = (Decimal(5).sqrt() - 1) / 2
        gap = abs(Decimal(fib(n)) / Decimal(fib(n + 1)) - target)
        return float(gap)
