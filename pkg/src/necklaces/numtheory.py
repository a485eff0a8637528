"""Exact integer primitives: totient, divisors, tuple gcd, multinomials."""

from __future__ import annotations

import math
from typing import Iterable

# Counts are plain Python ints (arbitrary precision, never negative).
Count = int


def multinomial(t: Iterable[int]) -> Count:
    """Return (sum t)! / prod(t_j!), or 0 if any entry is negative.

    Built as a product of binomials so no intermediate exceeds the result
    by more than one factor.
    """
    result = 1
    total = 0
    for k in t:
        if k < 0:
            return 0
        total += k
        result *= math.comb(total, k)
    return result


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def totient(g: int) -> int:
    """Euler's phi: how many of 1..g are coprime to g."""
    if g < 1:
        raise ValueError(f"totient needs g >= 1, got {g}")
    result = g
    for p in _factorize(g):
        result -= result // p
    return result


def divisors(n: int) -> list[int]:
    """Positive divisors of n in ascending order."""
    if n < 1:
        raise ValueError(f"divisors needs n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def gcd_tuple(n: Iterable[int]) -> int:
    """gcd of the entries; zeros are ignored."""
    n = tuple(n)
    if any(x < 0 for x in n):
        raise ValueError(f"entries must be nonnegative: {n}")
    g = math.gcd(*n)
    if g == 0:
        raise ValueError("gcd_tuple needs at least one positive entry")
    return g
