"""Exact counting of necklaces and bracelets with prescribed bead counts."""

from .closedform import (
    ColorMultiplicities,
    DihedralCase,
    Mode,
    classify_dihedral_case,
    count_cyclic,
    count_dihedral,
    reduce_by_divisor,
)
from .errors import IntegralityError, ResourceLimitError
from .numtheory import divisors, gcd_tuple, multinomial, totient
from .orbits import SymmetryGroup, canonical_form, count_orbits, representatives

__all__ = [
    "ColorMultiplicities",
    "DihedralCase",
    "IntegralityError",
    "Mode",
    "ResourceLimitError",
    "SymmetryGroup",
    "canonical_form",
    "classify_dihedral_case",
    "count_cyclic",
    "count_dihedral",
    "count_orbits",
    "divisors",
    "gcd_tuple",
    "multinomial",
    "reduce_by_divisor",
    "representatives",
    "totient",
]
