import math
import random

import pytest

from collatzlab.asymptotics import fib
from collatzlab.primes import (
    GCD_LEMMA_CAP,
    SIEVE_CAP,
    binomial_valuation,
    carry_count,
    factorial_divisibility_check,
    factorial_valuation,
    fib_coprimality,
    gcd_coprime_binomials,
    interfib_prime_witnesses,
    is_prime,
    new_prime_divisibility,
    new_primes,
    reconstruct_primes,
    sieve,
)

from conftest import brute_factorization, trial_division_primes


def test_sieve_small():
    assert sieve(10).primes == (2, 3, 5, 7)
    assert sieve(13).primes == (2, 3, 5, 7, 11, 13)
    assert sieve(2).primes == (2,)


def test_sieve_matches_trial_division():
    assert list(sieve(2000).primes) == trial_division_primes(2000)


def test_sieve_crosses_segments():
    limit = (1 << 18) + 3000  # past the first segment boundary
    primes = sieve(limit).primes
    assert primes[0] == 2 and primes[-1] <= limit
    assert all(is_prime(p) for p in primes[-50:])
    assert len(sieve(100000).primes) == 9592


def test_sieve_bounds():
    with pytest.raises(ValueError):
        sieve(1)
    with pytest.raises(ValueError):
        sieve(SIEVE_CAP + 1)


def test_is_prime():
    assert is_prime(2) and is_prime(3) and is_prime(196387)
    assert not is_prime(1) and not is_prime(561) and not is_prime(196418)


def test_factorial_valuation():
    assert factorial_valuation(10, 2) == 8
    assert factorial_valuation(5, 7) == 0
    assert factorial_valuation(13, 13) == 1
    with pytest.raises(ValueError):
        factorial_valuation(10, 4)


def test_factorial_valuation_matches_brute_factorization():
    for m in range(0, 13):
        factors = brute_factorization(math.factorial(m)) if m > 1 else {}
        for p in (2, 3, 5, 7, 11, 13):
            assert factorial_valuation(m, p) == factors.get(p, 0)


def test_binomial_valuation_examples():
    assert binomial_valuation(13, 5, 11) == 1
    assert binomial_valuation(13, 5, 13) == 1
    assert binomial_valuation(6, 3, 5) == 1
    with pytest.raises(ValueError):
        binomial_valuation(5, 6, 3)


def test_binomial_valuation_rebuilds_small_binomials():
    for a in range(0, 40):
        for b in range(0, a + 1):
            expected = brute_factorization(math.comb(a, b))
            for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
                assert binomial_valuation(a, b, p) == expected.get(p, 0)


def test_legendre_difference_equals_carry_count_randomized():
    rng = random.Random(31337)
    small_primes = sieve(100).primes
    for _ in range(1000):
        a = rng.randrange(0, 10**4 + 1)
        b = rng.randrange(0, a + 1)
        p = rng.choice(small_primes)
        legendre = (factorial_valuation(a, p) - factorial_valuation(b, p)
                    - factorial_valuation(a - b, p))
        assert legendre == carry_count(b, a - b, p)


def test_lemma_identity_k_choose():
    rng = random.Random(2718)
    for _ in range(1000):
        n = rng.randrange(1, 301)
        k = rng.randrange(1, n + 1)
        assert k * math.comb(n, k) == n * math.comb(n - 1, k - 1)


def test_factorial_divisibility_check():
    assert factorial_divisibility_check(1)
    assert factorial_divisibility_check(5)
    assert factorial_divisibility_check(10)


def test_interfib_prime_witnesses():
    assert interfib_prime_witnesses(3).primes == (3,)
    assert interfib_prime_witnesses(4).primes == (5,)
    assert interfib_prime_witnesses(6).primes == (11, 13)
    w5 = interfib_prime_witnesses(5)
    assert w5.primes == (7,) and w5.cited_exception
    with pytest.raises(ValueError):
        interfib_prime_witnesses(2)


def test_interfib_witnesses_exist_up_to_25():
    for n in range(3, 26):
        witness = interfib_prime_witnesses(n)
        assert witness.holds, n
        assert witness.cited_exception == (n in (5, 11))


def test_gcd_coprime_binomials_examples():
    assert gcd_coprime_binomials(6) == 6
    assert gcd_coprime_binomials(1) == 1
    assert gcd_coprime_binomials(7) == 7
    with pytest.raises(ValueError):
        gcd_coprime_binomials(0)
    with pytest.raises(ValueError):
        gcd_coprime_binomials(GCD_LEMMA_CAP + 1)


def test_gcd_coprime_binomials_matches_direct_computation():
    for n in range(1, 41):
        g = 0
        for k in range(1, n + 1):
            if math.gcd(k, n) == 1:
                g = math.gcd(g, math.comb(n, k))
        assert gcd_coprime_binomials(n) == g == n


def test_fib_coprimality():
    assert fib_coprimality(1)
    assert fib_coprimality(5)
    assert fib_coprimality(20)
    for n in range(1, 91):
        assert fib_coprimality(n)
        assert math.gcd(fib(n + 2), fib(n)) == 1


def test_new_primes_paper_sets():
    assert new_primes(1).primes == (2,)
    assert new_primes(2).primes == (3,)
    assert new_primes(3).primes == (5,)
    assert new_primes(4).primes == (7,)
    assert new_primes(5).primes == (11, 13)
    assert new_primes(6).primes == (17, 19)


def test_new_prime_divisibility_reports():
    report = new_prime_divisibility(5)
    assert report.passed
    assert report.interval == (8, 13)
    assert report.new_primes == (11, 13)
    assert report.exponents == {11: 1, 13: 1}
    assert report.to_json_dict()["pass"] is True

    report6 = new_prime_divisibility(6)
    assert report6.new_primes == (17, 19)
    factors = brute_factorization(math.comb(21, 8))
    assert all(factors.get(p, 0) == e for p, e in report6.exponents.items())

    assert new_prime_divisibility(1).passed


def test_reconstruct_primes():
    assert reconstruct_primes(1).primes == (2,)
    assert reconstruct_primes(3).primes == (2, 3, 5)
    assert reconstruct_primes(6).primes == (2, 3, 5, 7, 11, 13, 17, 19)
    for n_max in range(1, 13):
        built = reconstruct_primes(n_max)
        assert built.primes == sieve(fib(n_max + 2)).primes
