"""Three-way cross-checks and composition sweeps.

Each composition is counted by the closed form, by coefficient extraction
from the expanded cycle index, and by brute-force orbit enumeration.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from . import closedform, cycleindex, orbits
from .closedform import ColorMultiplicities, DihedralCase, Mode
from .numtheory import divisors, totient
from .orbits import SymmetryGroup

GROUPS = (SymmetryGroup.CYCLIC, SymmetryGroup.DIHEDRAL)


def compositions(N: int, m: int) -> Iterator[tuple[int, ...]]:
    """Ordered m-tuples of nonnegative ints summing to N, descending lex order."""
    if m == 1:
        yield (N,)
        return
    for first in range(N, -1, -1):
        for rest in compositions(N - first, m - 1):
            yield (first,) + rest


def partitions(N: int, m: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Non-increasing m-tuples summing to N, each with the number of compositions it stands for."""
    seen: Counter[tuple[int, ...]] = Counter()
    for c in compositions(N, m):
        seen[tuple(sorted(c, reverse=True))] += 1
    for key in sorted(seen, reverse=True):
        yield key, seen[key]


def necklace_total(N: int, m: int) -> int:
    """Number of m-colored necklaces of length N with any bead counts."""
    return sum(totient(d) * m ** (N // d) for d in divisors(N)) // N


def closed_count(counts, group: SymmetryGroup, mode: Mode = Mode.CORRECTED):
    if group is SymmetryGroup.CYCLIC:
        return closedform.count_cyclic(counts)
    return closedform.count_dihedral(counts, mode)


def cycle_index(N: int, m: int, group: SymmetryGroup, limit_terms: int | None = None):
    if group is SymmetryGroup.CYCLIC:
        return cycleindex.cycle_index_cyclic(N, m, limit_terms)
    return cycleindex.cycle_index_dihedral(N, m, limit_terms)


@dataclass
class Mismatch:
    counts: tuple[int, ...]
    group: SymmetryGroup
    case: DihedralCase | None
    closed_form: int | Fraction
    cycle_index: int
    brute_force: int

    def describe(self) -> str:
        case = self.case.value if self.case else "-"
        return (
            f"{self.group.value:8s} {str(self.counts):20s} {case:16s} "
            f"closed_form={self.closed_form} cycle_index={self.cycle_index} "
            f"brute_force={self.brute_force}"
        )


@dataclass
class VerifyReport:
    checked: Counter = field(default_factory=Counter)
    case_hits: Counter = field(default_factory=Counter)
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def shapes(max_n: int, max_colors: int) -> list[tuple[int, int]]:
    return [(N, m) for N in range(1, max_n + 1) for m in range(1, max_colors + 1)]


def verify(
    pairs: Iterable[tuple[int, int]],
    groups: Iterable[SymmetryGroup] = GROUPS,
    mode: Mode | str = Mode.CORRECTED,
    limit_terms: int | None = None,
    limit_words: int | None = None,
) -> VerifyReport:
    """Compare the three counting routes on every composition of each (N, m)."""
    mode = Mode.parse(mode)
    groups = [SymmetryGroup(g) for g in groups]
    report = VerifyReport()
    for N, m in sorted(set(pairs)):
        for group in groups:
            poly = cycle_index(N, m, group, limit_terms)
            for counts in compositions(N, m):
                n = ColorMultiplicities(counts)
                case = closedform.classify_dihedral_case(n) if group is SymmetryGroup.DIHEDRAL else None
                closed = closed_count(n, group, mode)
                extracted = cycleindex.extract_count(poly, counts)
                brute = orbits.count_orbits(n, group, limit_words)
                report.checked[group] += 1
                if case is not None:
                    report.case_hits[case] += 1
                if not closed == extracted == brute:
                    report.mismatches.append(Mismatch(counts, group, case, closed, extracted, brute))
    return report


@dataclass
class SweepRow:
    counts: tuple[int, ...]
    value: int | Fraction
    case: DihedralCase | None
    multiplicity: int = 1


def sweep(
    N: int,
    m: int,
    group: SymmetryGroup | str,
    mode: Mode | str = Mode.CORRECTED,
    method: str = "closed_form",
    collapse: bool = False,
    limit_terms: int | None = None,
    limit_words: int | None = None,
) -> tuple[list[SweepRow], int | Fraction]:
    """Count every m-part composition of N; return the rows and their total.

    With ``collapse`` the rows are partitions, each weighted by how many
    compositions it represents, and the total is unchanged.
    """
    group = SymmetryGroup(group)
    mode = Mode.parse(mode)
    items = partitions(N, m) if collapse else ((c, 1) for c in compositions(N, m))
    poly = cycle_index(N, m, group, limit_terms) if method == "cycle_index" else None
    rows = []
    for counts, mult in items:
        n = ColorMultiplicities(counts)
        case = closedform.classify_dihedral_case(n) if group is SymmetryGroup.DIHEDRAL else None
        if method == "closed_form":
            value = closed_count(n, group, mode)
        elif method == "cycle_index":
            value = cycleindex.extract_count(poly, counts)
        elif method == "brute_force":
            value = orbits.count_orbits(n, group, limit_words)
        else:
            raise ValueError(f"unknown method {method!r}")
        rows.append(SweepRow(counts, value, case, mult))
    return rows, sum(r.value * r.multiplicity for r in rows)
