import pytest

from schurdiv.primes import (
    FactorizationBudgetError,
    factorize,
    is_prime,
    primes_in_range,
    sieve,
)


def brute_primes(limit):
    out = []
    for n in range(2, limit + 1):
        if all(n % d for d in range(2, n)):
            out.append(n)
    return out


def test_sieve_matches_trial_division():
    assert sieve(1000) == brute_primes(1000)
    assert sieve(1) == []
    assert sieve(2) == [2]


@pytest.mark.parametrize("lo,hi", [(2, 100), (90, 130), (1000, 1100), (7, 7), (8, 8), (0, 3)])
def test_primes_in_range_matches_sieve(lo, hi):
    assert primes_in_range(lo, hi) == [p for p in sieve(max(hi, 2)) if lo <= p <= hi]


def test_is_prime_against_sieve():
    table = set(sieve(20000))
    for n in range(20000):
        assert is_prime(n) == (n in table), n


def test_is_prime_rejects_carmichael_numbers():
    for n in (561, 1105, 1729, 2465, 2821, 6601, 8911, 41041, 825265):
        assert not is_prime(n)


def test_is_prime_large():
    assert is_prime(2**89 - 1)
    assert is_prime(2**107 - 1)
    assert not is_prime((2**89 - 1) * (2**107 - 1))


@pytest.mark.parametrize("n", [1, 2, 12, 360, 1024, 9973, 2**20 + 7, 600851475143])
def test_factorize_recombines(n):
    factors = factorize(n)
    prod = 1
    for p, e in factors:
        assert is_prime(p)
        prod *= p**e
    assert prod == n
    assert factors == sorted(factors)


def test_factorize_budget():
    p, q = 1000003, 1000033
    assert is_prime(p) and is_prime(q)
    # prime cofactor above the bound is fine, composite cofactor is not
    assert factorize(4 * p, bound=1000) == [(2, 2), (p, 1)]
    with pytest.raises(FactorizationBudgetError):
        factorize(p * q, bound=1000)


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)
