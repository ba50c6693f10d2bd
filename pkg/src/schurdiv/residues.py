"""Consecutive k-th power residues modulo primes.

A residue r (0 < r < p) is a k-th power mod p exactly when
r^((p-1)/d) == 1 mod p with d = gcd(k, p-1); one modular exponentiation
per query, which is what makes whole-range prime scans cheap.

`residue_run_start` finds the least r whose run r, r+1, ..., r+m-1
consists entirely of k-th power residues below p; primes with no such
run are exceptional.  `scan_primes` sweeps a prime range and
`lambda_estimate` aggregates the running maximum of those run starts —
a range-limited empirical view of a quantity whose true supremum ranges
over all non-exceptional primes.

`consecutive_pair_via_triple` is the constructive route to a consecutive
residue pair: color {1..bound} by cosets of the k-th powers, find a
monochromatic x + y = z with x | y, and divide by x.  Then y' = y/x and
z' = z/x = y' + 1 are both honest integers at most `bound` and both
k-th power residues.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

from .coloring import coset_coloring
from .primes import is_prime, primes_in_range
from .ramsey import SchurWitness, direct_schur_div_search

__all__ = [
    "ConsecutivePair",
    "LambdaEstimate",
    "ResidueReport",
    "consecutive_pair_via_triple",
    "exceptional_primes",
    "is_kth_residue",
    "lambda_estimate",
    "residue_run_start",
    "scan_primes",
]


@dataclass(frozen=True)
class ResidueReport:
    p: int
    k: int
    m: int
    r: int | None  # None marks an exceptional prime

    @property
    def exceptional(self) -> bool:
        return self.r is None


@dataclass(frozen=True)
class LambdaEstimate:
    k: int
    m: int
    p_min: int
    p_max: int
    max_r: int | None  # None when every scanned prime was exceptional
    argmax_p: int | None  # smallest prime attaining max_r
    exceptional: tuple[int, ...]


def is_kth_residue(r: int, p: int, k: int) -> bool:
    """True iff r is congruent to a k-th power mod p, for 0 < r < p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 0 < r < p:
        raise ValueError(f"residue must satisfy 0 < r < p, got r={r}, p={p}")
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    return _is_residue_unchecked(r, p, k)


def _is_residue_unchecked(r: int, p: int, k: int) -> bool:
    d = gcd(k, p - 1)
    return pow(r, (p - 1) // d, p) == 1


def residue_run_start(p: int, k: int, m: int) -> int | None:
    """Minimal r with r..r+m-1 all k-th power residues and r+m-1 <= p-1;
    None when no such run exists (an exceptional prime)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError(f"run length must be >= 1, got {m}")
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    exponent = (p - 1) // gcd(k, p - 1)
    run = 0
    for r in range(1, p):
        if pow(r, exponent, p) == 1:
            run += 1
            if run == m:
                return r - m + 1
        else:
            run = 0
    return None


def _scan_block(args: tuple[int, int, int, int]) -> list[tuple[int, int | None]]:
    k, m, lo, hi = args
    return [(p, residue_run_start(p, k, m)) for p in primes_in_range(lo, hi)]


def scan_primes(k: int, m: int, p_min: int, p_max: int, threads: int = 1) -> list[ResidueReport]:
    """One report per prime in [p_min, p_max], ascending regardless of threads."""
    if not 2 <= p_min <= p_max:
        raise ValueError(f"need 2 <= p_min <= p_max, got {p_min}..{p_max}")
    if threads <= 1:
        rows = _scan_block((k, m, p_min, p_max))
    else:
        span = p_max - p_min + 1
        width = max(1024, span // (threads * 8) + 1)
        blocks = [
            (k, m, lo, min(lo + width - 1, p_max))
            for lo in range(p_min, p_max + 1, width)
        ]
        rows = []
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for block_rows in pool.map(_scan_block, blocks):
                rows.extend(block_rows)
    return [ResidueReport(p=p, k=k, m=m, r=r) for p, r in rows]


def lambda_estimate(k: int, m: int, p_min: int, p_max: int, threads: int = 1) -> LambdaEstimate:
    """Aggregate a prime scan: running max of run starts plus exceptional set."""
    reports = scan_primes(k, m, p_min, p_max, threads=threads)
    return summarize_reports(k, m, p_min, p_max, reports)


def summarize_reports(
    k: int, m: int, p_min: int, p_max: int, reports: list[ResidueReport]
) -> LambdaEstimate:
    max_r: int | None = None
    argmax_p: int | None = None
    exceptional = []
    for rep in reports:
        if rep.r is None:
            exceptional.append(rep.p)
        elif max_r is None or rep.r > max_r:
            max_r, argmax_p = rep.r, rep.p
    return LambdaEstimate(
        k=k, m=m, p_min=p_min, p_max=p_max,
        max_r=max_r, argmax_p=argmax_p, exceptional=tuple(exceptional),
    )


def exceptional_primes(k: int, m: int, p_max: int) -> list[int]:
    """Primes p <= p_max admitting no run of m consecutive k-th power residues."""
    if p_max < 2:
        raise ValueError(f"p_max must be >= 2, got {p_max}")
    return [p for p in primes_in_range(2, p_max) if residue_run_start(p, k, m) is None]


@dataclass(frozen=True)
class ConsecutivePair:
    y_prime: int
    z_prime: int
    witness: SchurWitness


def consecutive_pair_via_triple(p: int, k: int, bound: int) -> ConsecutivePair | None:
    """Consecutive k-th power residues y', z' = y'+1 <= bound, obtained by
    dividing a monochromatic divisible triple of the coset coloring by its
    smallest element.  None when {1..bound} holds no such triple (bound too
    small for the coset count); that outcome is reported, not raised."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    if p <= bound:
        raise ValueError(f"need p > bound, got p={p}, bound={bound}")
    witness = direct_schur_div_search(coset_coloring(p, k), bound)
    if witness is None:
        return None
    y_prime = witness.y // witness.x
    z_prime = witness.z // witness.x
    if z_prime != y_prime + 1:
        raise AssertionError(f"triple {witness} does not divide into a consecutive pair")
    for value in (y_prime, z_prime):
        if not is_kth_residue(value, p, k):
            raise AssertionError(f"{value} fails the residue test mod {p}")
    return ConsecutivePair(y_prime=y_prime, z_prime=z_prime, witness=witness)
