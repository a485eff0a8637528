"""Cycle indices of C_N and D_N as explicitly expanded sparse polynomials.

This is a deliberately naive oracle: every power sum is multiplied out term
by term, and counts are read back as coefficients.  Nothing here uses the
divisor-of-gcd shortcut from :mod:`necklaces.closedform`.

Polynomials carry an integer ``scale`` and represent ``terms / scale``, so
the cycle indices are stored as N*Z(C_N) and 2N*Z(D_N) with integer
coefficients.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .closedform import ColorMultiplicities
from .errors import IntegralityError, ResourceLimitError
from .numtheory import Count, divisors, totient

DEFAULT_LIMIT_TERMS = 10**7

Exponents = tuple[int, ...]


class SparsePoly:
    """Immutable polynomial in ``nvars`` variables with integer coefficients."""

    __slots__ = ("nvars", "scale", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, int] | Iterable = (), scale: int = 1):
        if nvars < 1:
            raise ValueError("a polynomial needs at least one variable")
        if scale < 1:
            raise ValueError("scale must be a positive integer")
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict[Exponents, int] = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} does not have {nvars} entries")
            merged[exps] = merged.get(exps, 0) + coeff
        self.nvars = nvars
        self.scale = scale
        self._terms = {e: c for e, c in merged.items() if c}

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def terms(self) -> list[tuple[Exponents, int]]:
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[tuple[Exponents, int]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        # compare as rationals: a/s == b/t  <=>  a*t == b*s
        return self.nvars == other.nvars and {
            e: c * other.scale for e, c in self._terms.items()
        } == {e: c * self.scale for e, c in other._terms.items()}

    def __hash__(self):
        return hash((self.nvars, frozenset(_reduced(self)._terms.items())))

    def with_scale(self, scale: int) -> "SparsePoly":
        return SparsePoly(self.nvars, self._terms, scale)

    def dumps(self) -> str:
        """Text form: a ``scale=<k>`` header, then one term per line."""
        lines = [f"scale={self.scale}"]
        for exps, coeff in self.terms():
            mono = " ".join(f"x{i + 1}^{e}" for i, e in enumerate(exps))
            lines.append(f"{coeff} * {mono}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"SparsePoly(nvars={self.nvars}, terms={len(self)}, scale={self.scale})"


def _reduced(p: SparsePoly) -> SparsePoly:
    g = math.gcd(p.scale, *p._terms.values())
    return SparsePoly(p.nvars, {e: c // g for e, c in p._terms.items()}, p.scale // g)


def constant(nvars: int, c: int = 1) -> SparsePoly:
    return SparsePoly(nvars, {(0,) * nvars: c})


def power_sum(g: int, m: int) -> SparsePoly:
    """x1^g + ... + xm^g."""
    if g < 1 or m < 1:
        raise ValueError(f"power_sum needs g >= 1 and m >= 1, got g={g}, m={m}")
    terms = {}
    for i in range(m):
        exps = [0] * m
        exps[i] = g
        terms[tuple(exps)] = 1
    return SparsePoly(m, terms)


def _check_nvars(p: SparsePoly, q: SparsePoly) -> None:
    if p.nvars != q.nvars:
        raise ValueError(f"variable count mismatch: {p.nvars} vs {q.nvars}")


def poly_mul(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    _check_nvars(p, q)
    out: dict[Exponents, int] = {}
    for ea, ca in p._terms.items():
        for eb, cb in q._terms.items():
            e = tuple(a + b for a, b in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return SparsePoly(p.nvars, out, p.scale * q.scale)


def poly_pow(p: SparsePoly, e: int) -> SparsePoly:
    if e < 0:
        raise ValueError("negative exponent")
    result = constant(p.nvars)
    for _ in range(e):
        result = poly_mul(result, p)
    return result


def poly_add_scaled(p: SparsePoly, q: SparsePoly, c: int = 1) -> SparsePoly:
    """p + c*q, brought to the lcm of the two scales."""
    _check_nvars(p, q)
    scale = math.lcm(p.scale, q.scale)
    fp, fq = scale // p.scale, scale // q.scale
    out = {e: v * fp for e, v in p._terms.items()}
    for e, v in q._terms.items():
        out[e] = out.get(e, 0) + c * fq * v
    return SparsePoly(p.nvars, out, scale)


def _times(p: SparsePoly, c: int) -> SparsePoly:
    return SparsePoly(p.nvars, {e: c * v for e, v in p._terms.items()}, p.scale)


def _guard(N: int, m: int, limit_terms: int | None) -> None:
    limit = DEFAULT_LIMIT_TERMS if limit_terms is None else limit_terms
    # number of monomials of total degree N in m variables
    size = math.comb(N + m - 1, m - 1)
    if size > limit:
        raise ResourceLimitError(
            f"cycle index for N={N}, m={m} has up to {size} terms (limit {limit})"
        )


def cycle_index_cyclic(N: int, m: int, limit_terms: int | None = None) -> SparsePoly:
    """N * Z(C_N) = sum over g | N of phi(g) * (x1^g + ... + xm^g)^(N/g)."""
    if N < 1 or m < 1:
        raise ValueError(f"need N >= 1 and m >= 1, got N={N}, m={m}")
    _guard(N, m, limit_terms)
    total = SparsePoly(m)
    for g in divisors(N):
        total = poly_add_scaled(total, poly_pow(power_sum(g, m), N // g), totient(g))
    return total.with_scale(N)


def cycle_index_dihedral(N: int, m: int, limit_terms: int | None = None) -> SparsePoly:
    """2N * Z(D_N): the rotations plus the N reflections."""
    rotations = cycle_index_cyclic(N, m, limit_terms)
    x1, x2 = power_sum(1, m), power_sum(2, m)
    L = N // 2
    if N % 2:
        # every reflection fixes one bead and swaps L pairs
        reflections = _times(poly_mul(x1, poly_pow(x2, L)), N)
    else:
        # N/2 reflections through two beads, N/2 through no bead
        through_beads = poly_mul(poly_pow(x1, 2), poly_pow(x2, L - 1))
        reflections = _times(poly_add_scaled(through_beads, poly_pow(x2, L)), L)
    total = poly_add_scaled(rotations.with_scale(1), reflections)
    return total.with_scale(2 * N)


def extract_count(p: SparsePoly, n: Union[ColorMultiplicities, Sequence[int]]) -> Count:
    """Coefficient of x^n divided (exactly) by the scale.

    Shorter exponent vectors are padded with zeros; a cycle index is
    symmetric in its variables, so the position of unused colors is
    irrelevant.
    """
    exps = tuple(n.counts if isinstance(n, ColorMultiplicities) else n)
    if len(exps) > p.nvars:
        raise ValueError(f"{len(exps)} colors requested from a {p.nvars}-variable polynomial")
    exps = exps + (0,) * (p.nvars - len(exps))
    q, r = divmod(p.coefficient(exps), p.scale)
    if r:
        raise IntegralityError(
            f"coefficient of {exps} is not divisible by scale {p.scale}"
        )
    return q
