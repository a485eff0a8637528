"""Brute-force orbit counting by canonical forms.

Every arrangement of the multiset is visited and mapped to the
lexicographically smallest word in its orbit; the orbits are the distinct
canonical forms.  No fixed-point counting is involved, which keeps this
path independent of the cycle index.

Two scans are available.  The reference scan walks the lexicographic
stream from :func:`multiset_words` and calls :func:`canonical_form` on each
word.  The vectorized scan encodes words as base-m integers (most
significant digit first, so integer order is lexicographic order) and does
the same rotation/reflection minimum on numpy arrays, one lexicographic
prefix block at a time.
"""

from __future__ import annotations

import enum
import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .closedform import ColorMultiplicities, Multiplicities, as_multiplicities
from .errors import IntegralityError, ResourceLimitError
from .numtheory import Count, multinomial

DEFAULT_LIMIT_WORDS = 10**8
LIMIT_ENV = "NECKLACE_LIMIT_WORDS"

# words per vectorized block
BLOCK_WORDS = 1 << 18

_INT64_MAX = np.iinfo(np.int64).max

Word = tuple[int, ...]


class SymmetryGroup(enum.Enum):
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"


def word_limit(limit: int | None = None) -> int:
    if limit is not None:
        return limit
    env = os.environ.get(LIMIT_ENV)
    return int(env) if env else DEFAULT_LIMIT_WORDS


def _checked(n: Multiplicities, limit: int | None) -> ColorMultiplicities:
    n = as_multiplicities(n)
    total = multinomial(n.counts)
    bound = word_limit(limit)
    if total > bound:
        raise ResourceLimitError(
            f"{n.counts} has {total} arrangements (limit {bound})"
        )
    return n


def multiset_words(n: Multiplicities, limit: int | None = None) -> Iterator[Word]:
    """Every arrangement of the multiset once, in lexicographic order.

    The size check happens on call, before the first word is produced.
    """
    n = _checked(n, limit)
    return _successors([c for c, k in enumerate(n.counts) for _ in range(k)])


def _successors(w: list[int]) -> Iterator[Word]:
    size = len(w)
    while True:
        yield tuple(w)
        i = size - 2
        while i >= 0 and w[i] >= w[i + 1]:
            i -= 1
        if i < 0:
            return
        j = size - 1
        while w[j] <= w[i]:
            j -= 1
        w[i], w[j] = w[j], w[i]
        w[i + 1:] = reversed(w[i + 1:])


def transforms(w: Sequence[int], g: SymmetryGroup) -> Iterator[Word]:
    """All images of ``w`` under the group (with repeats)."""
    w = tuple(w)
    size = len(w)
    for i in range(size):
        yield w[i:] + w[:i]
    if g is SymmetryGroup.DIHEDRAL:
        r = w[::-1]
        for i in range(size):
            yield r[i:] + r[:i]


def canonical_form(w: Sequence[int], g: SymmetryGroup) -> Word:
    """Lexicographically smallest word in the orbit of ``w``."""
    if not w:
        return ()
    return min(transforms(w, SymmetryGroup(g)))


@dataclass(frozen=True)
class Census:
    """Canonical forms (as base-m codes, ascending) and their orbit sizes."""

    codes: Sequence[int]
    sizes: Sequence[int]
    N: int
    m: int

    def words(self) -> list[Word]:
        return [decode(int(c), self.N, self.m) for c in self.codes]


def encode(w: Sequence[int], m: int) -> int:
    code = 0
    for bead in w:
        code = code * m + bead
    return code


def decode(code: int, N: int, m: int) -> Word:
    out = [0] * N
    for i in range(N - 1, -1, -1):
        code, out[i] = divmod(code, m)
    return tuple(out)


def _reference_census(n: ColorMultiplicities, g: SymmetryGroup) -> Census:
    tally: Counter[Word] = Counter()
    for w in _successors([c for c, k in enumerate(n.counts) for _ in range(k)]):
        tally[canonical_form(w, g)] += 1
    keys = sorted(tally)
    return Census([encode(k, n.m) for k in keys], [tally[k] for k in keys], n.N, n.m)


def _prefix_blocks(counts: tuple[int, ...], m: int, limit: int):
    """Split the lexicographic stream into runs sharing a prefix.

    Yields (prefix code, remaining tallies) in lexicographic order; each
    run holds at most ``limit`` words unless it cannot be split further.
    """
    stack = [(0, counts)]
    while stack:
        prefix, rest = stack.pop()
        if multinomial(rest) <= limit or sum(rest) <= 1:
            yield prefix, rest
            continue
        # pushed in reverse so the smallest color is popped first
        for color in range(m - 1, -1, -1):
            if rest[color]:
                smaller = rest[:color] + (rest[color] - 1,) + rest[color + 1:]
                stack.append((prefix * m + color, smaller))


def _arrangement_codes(counts: tuple[int, ...], m: int) -> np.ndarray:
    """Codes of every arrangement of ``counts``, ascending."""
    memo: dict[tuple[int, ...], np.ndarray] = {}

    def build(rest: tuple[int, ...]) -> np.ndarray:
        if rest in memo:
            return memo[rest]
        length = sum(rest)
        if length == 0:
            out = np.zeros(1, dtype=np.int64)
        else:
            lead = m ** (length - 1)
            out = np.concatenate([
                color * lead + build(rest[:color] + (k - 1,) + rest[color + 1:])
                for color, k in enumerate(rest) if k
            ])
        memo[rest] = out
        return out

    return build(counts)


def _rotation_min(codes: np.ndarray, N: int, m: int, best: np.ndarray) -> None:
    hi = m ** (N - 1)
    x = codes
    for _ in range(N - 1):
        # move the leading digit to the end
        x = (x % hi) * m + x // hi
        np.minimum(best, x, out=best)


def canonical_codes(codes: np.ndarray, N: int, m: int, g: SymmetryGroup) -> np.ndarray:
    """Vectorized :func:`canonical_form` on encoded words of length N."""
    best = codes.copy()
    _rotation_min(codes, N, m, best)
    if g is SymmetryGroup.DIHEDRAL:
        rev = np.zeros_like(codes)
        rest = codes.copy()
        for _ in range(N):
            rev = rev * m + rest % m
            rest //= m
        np.minimum(best, rev, out=best)
        _rotation_min(rev, N, m, best)
    return best


def _merge(keys: np.ndarray, sizes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    order = np.argsort(keys, kind="stable")
    keys, sizes = keys[order], sizes[order]
    uniq, first = np.unique(keys, return_index=True)
    return uniq, np.add.reduceat(sizes, first) if len(keys) else sizes


def _vectorized_census(n: ColorMultiplicities, g: SymmetryGroup, block: int) -> Census:
    N, m = n.N, n.m
    keys: list[np.ndarray] = []
    sizes: list[np.ndarray] = []
    pending = 0
    for prefix, rest in _prefix_blocks(n.counts, m, block):
        codes = prefix * m ** sum(rest) + _arrangement_codes(rest, m)
        u, c = np.unique(canonical_codes(codes, N, m, g), return_counts=True)
        keys.append(u)
        sizes.append(c)
        pending += len(u)
        if pending > 4 * block and len(keys) > 1:
            k, s = _merge(np.concatenate(keys), np.concatenate(sizes))
            keys, sizes, pending = [k], [s], len(k)
    k, s = _merge(np.concatenate(keys), np.concatenate(sizes))
    return Census(k, s, N, m)


def census(
    n: Multiplicities,
    g: SymmetryGroup | str,
    limit: int | None = None,
    vectorized: bool | None = None,
) -> Census:
    """Scan every arrangement and tally orbit sizes by canonical form.

    ``vectorized=None`` picks the numpy scan whenever codes fit in int64.
    The orbit sizes are checked to add up to the number of arrangements.
    """
    n = _checked(n, limit)
    g = SymmetryGroup(g)
    fits = n.m ** n.N <= _INT64_MAX
    if vectorized is None:
        vectorized = fits
    if vectorized and not fits:
        raise ValueError(f"codes for N={n.N}, m={n.m} do not fit in int64")
    result = _vectorized_census(n, g, BLOCK_WORDS) if vectorized else _reference_census(n, g)
    total = sum(int(s) for s in result.sizes)
    if total != multinomial(n.counts):
        raise IntegralityError(
            f"orbit sizes of {n.counts} add up to {total}, not {multinomial(n.counts)}"
        )
    return result


def count_orbits(
    n: Multiplicities, g: SymmetryGroup | str, limit: int | None = None, vectorized: bool | None = None
) -> Count:
    return len(census(n, g, limit, vectorized).codes)


def representatives(
    n: Multiplicities, g: SymmetryGroup | str, limit: int | None = None, vectorized: bool | None = None
) -> list[Word]:
    """Sorted canonical forms, one per orbit."""
    return census(n, g, limit, vectorized).words()


def format_word(w: Sequence[int], m: int | None = None) -> str:
    """Digits when every color fits in one digit, else comma-separated."""
    if m is None:
        m = max(w, default=0) + 1
    if m <= 10:
        return "".join(str(b) for b in w)
    return ",".join(str(b) for b in w)
