"""Naive reference computations that share no code with the package."""

import math
from itertools import permutations


def totient_scan(g):
    return sum(1 for k in range(1, g + 1) if math.gcd(k, g) == 1)


def divisors_scan(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def multinomial_factorials(t):
    return math.factorial(sum(t)) // math.prod(math.factorial(k) for k in t)


def orbit_count(counts, dihedral):
    """Distinct orbits of all arrangements, each orbit stored as a frozenset."""
    beads = [c for c, k in enumerate(counts) for _ in range(k)]
    seen = set()
    for w in set(permutations(beads)):
        images = [w[i:] + w[:i] for i in range(len(w))]
        if dihedral:
            r = w[::-1]
            images += [r[i:] + r[:i] for i in range(len(w))]
        seen.add(frozenset(images))
    return len(seen)
