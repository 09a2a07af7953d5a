"""Prime sieving, factorial/binomial prime valuations, and Fibonacci-interval
prime checks.

Divisibility of the huge binomials C(F(n+2), F(n)) is decided through
p-adic valuations (the Legendre floor sums, cross-checked against base-p
carry counts), never by materializing the binomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .asymptotics import fib

SIEVE_CAP = 10**8
_SEGMENT = 1 << 18

# the cited primitive-divisor result for Fibonacci numbers excludes these
# indices; the interval statement itself is still checked directly
PRIMITIVE_DIVISOR_EXCEPTIONS = (5, 11)

GCD_LEMMA_CAP = 500


class PrimeSet(NamedTuple):
    primes: tuple[int, ...]
    bound: int


@dataclass(frozen=True)
class IntervalWitness:
    """Primes found in (F(n), F(n+1)]; the claim holds iff some exist."""

    n: int
    lower: int
    upper: int
    primes: tuple[int, ...]
    cited_exception: bool

    @property
    def holds(self) -> bool:
        return bool(self.primes)


@dataclass(frozen=True)
class NewPrimeReport:
    """Divisibility of C(F(n+2), F(n)) by every prime in (F(n+1), F(n+2)]."""

    n: int
    interval: tuple[int, int]
    new_primes: tuple[int, ...]
    exponents: dict[int, int]
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "interval": list(self.interval),
            "new_primes": list(self.new_primes),
            "exponents": {str(p): e for p, e in self.exponents.items()},
            "pass": self.passed,
        }


def sieve(limit: int) -> PrimeSet:
    """All primes <= limit, ascending, by a segmented sieve."""
    if limit < 2:
        raise ValueError("sieve limit must be >= 2")
    if limit > SIEVE_CAP:
        raise ValueError(f"sieve capped at {SIEVE_CAP}, got {limit}")
    root = math.isqrt(limit)
    base = bytearray([1]) * (root + 1)
    base[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(root) + 1):
        if base[p]:
            base[p * p :: p] = bytearray(len(range(p * p, root + 1, p)))
    base_primes = [i for i in range(root + 1) if base[i]]
    primes = list(base_primes)
    lo = root + 1
    while lo <= limit:
        hi = min(lo + _SEGMENT, limit + 1)
        seg = bytearray([1]) * (hi - lo)
        for p in base_primes:
            start = max(p * p, (lo + p - 1) // p * p)
            if start < hi:
                seg[start - lo :: p] = bytearray(len(range(start, hi, p)))
        primes.extend(i + lo for i, flag in enumerate(seg) if flag)
        lo = hi
    return PrimeSet(tuple(primes), limit)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def factorial_valuation(m: int, p: int) -> int:
    """Exponent of the prime p in m!, by the floor sum m//p + m//p**2 + ..."""
    if m < 0:
        raise ValueError("m must be >= 0")
    _check_prime(p)
    total = 0
    q = p
    while q <= m:
        total += m // q
        q *= p
    return total


def carry_count(b: int, c: int, p: int) -> int:
    """Number of carries when adding b and c in base p."""
    carries = carry = 0
    while b > 0 or c > 0:
        carry = 1 if b % p + c % p + carry >= p else 0
        carries += carry
        b //= p
        c //= p
    return carries


def binomial_valuation(a: int, b: int, p: int) -> int:
    """Exponent of the prime p in C(a, b).

    Computed as the Legendre difference v(a!) - v(b!) - v((a-b)!) and,
    independently, as the number of carries when adding b and a-b in base
    p; the two must agree.
    """
    if not 0 <= b <= a:
        raise ValueError("need 0 <= b <= a")
    _check_prime(p)
    legendre = factorial_valuation(a, p) - factorial_valuation(b, p) - factorial_valuation(a - b, p)
    carries = carry_count(b, a - b, p)
    if legendre != carries:
        raise AssertionError(
            f"valuation mismatch for C({a},{b}) at p={p}: {legendre} vs {carries}"
        )
    return legendre


def factorial_divisibility_check(n: int) -> bool:
    """True iff every prime <= F(n+2) divides F(n+2)!."""
    if n < 1:
        raise ValueError("index starts at 1")
    m = fib(n + 2)
    return all(factorial_valuation(m, p) >= 1 for p in sieve(m).primes)


def interfib_prime_witnesses(n: int) -> IntervalWitness:
    """Primes strictly above F(n) and up to F(n+1)."""
    if n < 3:
        raise ValueError("witness intervals start at n = 3 (F(n) >= 2)")
    lower, upper = fib(n), fib(n + 1)
    primes = tuple(p for p in sieve(upper).primes if p > lower)
    return IntervalWitness(
        n=n,
        lower=lower,
        upper=upper,
        primes=primes,
        cited_exception=n in PRIMITIVE_DIVISOR_EXCEPTIONS,
    )


def new_primes(n: int) -> PrimeSet:
    """Primes p with F(n+1) < p <= F(n+2)."""
    if n < 1:
        raise ValueError("index starts at 1")
    lower, upper = fib(n + 1), fib(n + 2)
    return PrimeSet(tuple(p for p in sieve(upper).primes if p > lower), upper)


def new_prime_divisibility(n: int) -> NewPrimeReport:
    """Check that every prime in (F(n+1), F(n+2)] divides C(F(n+2), F(n))."""
    if n < 1:
        raise ValueError("index starts at 1")
    fresh = new_primes(n)
    a, b = fib(n + 2), fib(n)
    exponents = {p: binomial_valuation(a, b, p) for p in fresh.primes}
    return NewPrimeReport(
        n=n,
        interval=(fib(n + 1), fib(n + 2)),
        new_primes=fresh.primes,
        exponents=exponents,
        passed=all(e >= 1 for e in exponents.values()),
    )


def reconstruct_primes(n_max: int) -> PrimeSet:
    """Union of the new-prime intervals for n = 1..n_max, ascending.

    The intervals (F(n+1), F(n+2)] tile (1, F(n_max+2)], so the union
    should reproduce every prime up to F(n_max+2); callers can verify
    against sieve() independently.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    merged: set[int] = set()
    for n in range(1, n_max + 1):
        merged.update(new_primes(n).primes)
    return PrimeSet(tuple(sorted(merged)), fib(n_max + 2))


def gcd_coprime_binomials(n: int) -> int:
    """gcd of {C(n, k) : 1 <= k <= n, gcd(k, n) = 1}; equals n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > GCD_LEMMA_CAP:
        raise ValueError(f"capped at n = {GCD_LEMMA_CAP}, got {n}")
    g = 0
    c = 1  # C(n, 0)
    for k in range(1, n + 1):
        c = c * (n - k + 1) // k
        if math.gcd(k, n) == 1:
            g = math.gcd(g, c)
    return g


def fib_coprimality(n: int) -> bool:
    """True iff gcd(F(n+2), F(n)) = 1 and gcd(F(n+1), F(n)) = 1."""
    if n < 1:
        raise ValueError("index starts at 1")
    return math.gcd(fib(n + 2), fib(n)) == 1 and math.gcd(fib(n + 1), fib(n)) == 1
