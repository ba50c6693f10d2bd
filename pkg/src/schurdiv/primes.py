"""Prime sieves, primality testing, and trial-division factorization.

Shared arithmetic plumbing: residue scanners iterate primes from a
segmented sieve, coset colorings validate the primality of their modulus,
and the multiplicative-function evaluator factorizes small integers.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

__all__ = [
    "FactorizationBudgetError",
    "factorize",
    "is_prime",
    "prime_table",
    "primes_in_range",
    "sieve",
]

# Witnesses making Miller-Rabin deterministic for n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

DEFAULT_FACTOR_BOUND = 10**6


class FactorizationBudgetError(ValueError):
    """Trial division ran out of primes before the cofactor was resolved."""


def sieve(limit: int) -> list[int]:
    """All primes <= limit, ascending."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i, f in enumerate(flags) if f]


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi, via a segmented sieve."""
    lo = max(lo, 2)
    if hi < lo:
        return []
    base = sieve(isqrt(hi))
    flags = bytearray([1]) * (hi - lo + 1)
    for p in base:
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start > hi:
            continue
        flags[start - lo :: p] = bytearray(len(flags[start - lo :: p]))
        if lo <= p <= hi:
            flags[p - lo] = 1
    return [lo + i for i, f in enumerate(flags) if f]


def is_prime(n: int) -> bool:
    """Miller-Rabin with fixed bases; deterministic for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=8)
def prime_table(limit: int) -> tuple[int, ...]:
    """Cached ascending prime tuple for repeated trial division."""
    return tuple(sieve(limit))


def factorize(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs, ascending.

    Trial division only goes up to `bound`; a leftover cofactor is accepted
    when it is provably prime, otherwise FactorizationBudgetError is raised.
    """
    if n < 1:
        raise ValueError(f"cannot factorize n={n}; need n >= 1")
    out: list[tuple[int, int]] = []
    rest = n
    for p in prime_table(bound):
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out.append((p, e))
    if rest > 1:
        # No factor <= bound remains, so a cofactor below bound^2 is prime.
        if rest <= bound * bound or is_prime(rest):
            out.append((rest, 1))
        else:
            raise FactorizationBudgetError(
                f"cofactor {rest} of {n} has no prime factor <= {bound} and is composite"
            )
    return out
