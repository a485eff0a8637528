"""Closed-form counts of cyclic and dihedral necklaces with fixed bead counts.

The cyclic count sums only over divisors of the gcd of the color counts:

    gamma_C(n) = (1/N) * sum_{d | gcd(n)} phi(d) * P(n / d)

where P is the multinomial coefficient.  The dihedral count splits on the
parity of N and of the individual counts into five branches (see
:class:`DihedralCase`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

from .errors import IntegralityError
from .numtheory import Count, divisors, gcd_tuple, multinomial, totient


@dataclass(frozen=True)
class ColorMultiplicities:
    """Per-color bead counts with unused colors removed.

    ``source`` keeps the tuple as given (zeros included) so callers can map
    color positions back; it does not take part in equality.
    """

    counts: tuple[int, ...]
    source: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __init__(self, counts: Iterable[int]):
        raw = tuple(int(c) for c in counts)
        if any(c < 0 for c in raw):
            raise ValueError(f"bead counts must be nonnegative: {raw}")
        kept = tuple(c for c in raw if c > 0)
        if not kept:
            raise ValueError("at least one color needs a positive bead count")
        object.__setattr__(self, "counts", kept)
        object.__setattr__(self, "source", raw)

    @property
    def N(self) -> int:
        return sum(self.counts)

    @property
    def m(self) -> int:
        return len(self.counts)

    @property
    def delta(self) -> int:
        return gcd_tuple(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)


Multiplicities = Union[ColorMultiplicities, Iterable[int]]


def as_multiplicities(n: Multiplicities) -> ColorMultiplicities:
    if isinstance(n, ColorMultiplicities):
        return n
    return ColorMultiplicities(n)


@dataclass(frozen=True)
class ReducedTuple:
    """Counts divided through by a common divisor ``d``."""

    entries: tuple[int, ...]
    d: int

    @property
    def K(self) -> int:
        return sum(self.entries)


class DihedralCase(enum.Enum):
    ODD_ONE_ODD = "odd_one_odd"
    ODD_MANY_ODD = "odd_many_odd"
    EVEN_ALL_EVEN = "even_all_even"
    EVEN_ONE_PAIR = "even_one_pair"
    EVEN_MANY_PAIRS = "even_many_pairs"


class Mode(enum.Enum):
    CORRECTED = "corrected"
    PAPER_LITERAL = "paper_literal"

    @classmethod
    def parse(cls, value: "Mode | str") -> "Mode":
        if isinstance(value, cls):
            return value
        return cls(str(value).replace("-", "_"))


def reduce_by_divisor(n: Multiplicities, d: int) -> ReducedTuple:
    n = as_multiplicities(n)
    if d < 1 or any(c % d for c in n.counts):
        raise ValueError(f"{d} does not divide every entry of {n.counts}")
    return ReducedTuple(tuple(c // d for c in n.counts), d)


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise IntegralityError(f"{what}: {num} is not divisible by {den}")
    return q


def cyclic_numerator(n: Multiplicities) -> int:
    """N times the cyclic count; always a multiple of N."""
    n = as_multiplicities(n)
    return sum(
        totient(d) * multinomial(reduce_by_divisor(n, d).entries)
        for d in divisors(n.delta)
    )


def count_cyclic(n: Multiplicities) -> Count:
    n = as_multiplicities(n)
    return _exact_div(cyclic_numerator(n), n.N, f"cyclic count of {n.counts}")


def classify_dihedral_case(n: Multiplicities) -> DihedralCase:
    n = as_multiplicities(n)
    odd = sum(c % 2 for c in n.counts)
    if n.N % 2:
        return DihedralCase.ODD_ONE_ODD if odd == 1 else DihedralCase.ODD_MANY_ODD
    if odd == 0:
        return DihedralCase.EVEN_ALL_EVEN
    if odd == 2:
        return DihedralCase.EVEN_ONE_PAIR
    return DihedralCase.EVEN_MANY_PAIRS


def _halves(counts: tuple[int, ...]) -> tuple[int, ...]:
    # floor-halving: odd entries 2a+1 -> a, even entries 2b -> b
    return tuple(c // 2 for c in counts)


def count_dihedral(
    n: Multiplicities, mode: Mode | str = Mode.CORRECTED
) -> Union[Count, Fraction]:
    """Number of bracelets (rotation + reflection classes).

    In corrected mode the result is an exact ``int``.  ``paper_literal``
    uses the full multinomial P(n) instead of the cyclic count in the
    one-odd and one-pair branches and returns a ``Fraction``; that value
    can be wrong or even non-integral and is for diagnostics only.
    """
    n = as_multiplicities(n)
    mode = Mode.parse(mode)
    case = classify_dihedral_case(n)
    half = _halves(n.counts)
    gamma_c = Fraction(count_cyclic(n))

    if case in (DihedralCase.ODD_ONE_ODD, DihedralCase.EVEN_ONE_PAIR):
        lead = gamma_c if mode is Mode.CORRECTED else Fraction(multinomial(n.counts))
        value = (lead + multinomial(half)) / 2
    elif case is DihedralCase.EVEN_ALL_EVEN:
        fixed_vertex = sum(
            multinomial(half[:q] + (half[q] - 1,) + half[q + 1:])
            for q in range(len(half))
        )
        value = gamma_c / 2 + Fraction(fixed_vertex, 4) + Fraction(multinomial(half), 4)
    else:
        value = gamma_c / 2

    if mode is Mode.PAPER_LITERAL:
        return value
    if value.denominator != 1:
        raise IntegralityError(
            f"dihedral count of {n.counts} ({case.value}) came out as {value}"
        )
    return value.numerator
