import pytest

from necklaces.closedform import ColorMultiplicities, count_cyclic, count_dihedral
from necklaces.cycleindex import (
    SparsePoly,
    constant,
    cycle_index_cyclic,
    cycle_index_dihedral,
    extract_count,
    poly_add_scaled,
    poly_mul,
    poly_pow,
    power_sum,
)
from necklaces.errors import IntegralityError, ResourceLimitError
from necklaces.numtheory import divisors, multinomial, totient
from necklaces.verify import compositions
from oracles import multinomial_factorials


def test_power_sum_examples():
    assert power_sum(1, 2).terms() == [((0, 1), 1), ((1, 0), 1)]
    assert power_sum(2, 3).terms() == [((0, 0, 2), 1), ((0, 2, 0), 1), ((2, 0, 0), 1)]
    assert power_sum(4, 1).terms() == [((4,), 1)]


@pytest.mark.parametrize("g, m", [(0, 2), (2, 0)])
def test_power_sum_rejects(g, m):
    with pytest.raises(ValueError):
        power_sum(g, m)


def test_poly_pow():
    x = power_sum(1, 2)
    assert poly_pow(x, 0) == constant(2)
    assert poly_pow(x, 2).terms() == [((0, 2), 1), ((1, 1), 2), ((2, 0), 1)]
    assert poly_pow(x, 9).coefficient((3, 6)) == 84 == multinomial_factorials((3, 6))


def test_poly_ops_merge_and_drop_zeros():
    x = power_sum(1, 2)
    assert len(poly_add_scaled(x, x, -1)) == 0
    half = SparsePoly(2, {(1, 0): 1}, scale=2)
    third = SparsePoly(2, {(1, 0): 1}, scale=3)
    total = poly_add_scaled(half, third)
    assert total.scale == 6 and total.coefficient((1, 0)) == 5
    assert poly_mul(half, third).scale == 6


def test_variable_mismatch():
    with pytest.raises(ValueError):
        poly_mul(power_sum(1, 2), power_sum(1, 3))


def test_cycle_index_cyclic_examples():
    p = cycle_index_cyclic(1, 2)
    assert p.scale == 1 and p.terms() == [((0, 1), 1), ((1, 0), 1)]
    # (x1+x2)^4 + (x1^2+x2^2)^2 + 2(x1^4+x2^4): 6 + 2 + 0
    assert cycle_index_cyclic(4, 2).coefficient((2, 2)) == 8
    assert cycle_index_cyclic(3, 3).coefficient((1, 1, 1)) == 6


def test_cycle_index_dihedral_examples():
    p = cycle_index_dihedral(2, 2)
    assert p.scale == 4 and p.coefficient((1, 1)) == 4
    assert extract_count(p, (1, 1)) == 1
    assert extract_count(cycle_index_dihedral(3, 2), (1, 2)) == 1
    assert extract_count(cycle_index_dihedral(6, 2), (3, 3)) == 3


def test_extract_count_examples():
    assert extract_count(cycle_index_cyclic(4, 2), (2, 2)) == 2
    assert extract_count(cycle_index_cyclic(4, 2), (4, 0)) == 1
    assert extract_count(cycle_index_cyclic(4, 2), ColorMultiplicities((4, 0))) == 1
    assert extract_count(cycle_index_dihedral(4, 3), (1, 1, 2)) == 2


def test_extract_count_rejects_non_integral():
    broken = SparsePoly(2, {(1, 1): 3}, scale=2)
    with pytest.raises(IntegralityError):
        extract_count(broken, (1, 1))


def test_term_guard():
    with pytest.raises(ResourceLimitError):
        cycle_index_cyclic(40, 4, limit_terms=1000)


def test_dumps_format():
    # X1^2 + X2 = 2 x1^2 + 2 x1 x2 + 2 x2^2
    text = cycle_index_cyclic(2, 2).dumps()
    assert text == "scale=2\n2 * x1^0 x2^2\n2 * x1^1 x2^1\n2 * x1^2 x2^0\n"


@pytest.mark.parametrize("N", range(1, 13))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_agrees_with_closed_form(N, m):
    cyc, dih = cycle_index_cyclic(N, m), cycle_index_dihedral(N, m)
    for n in compositions(N, m):
        assert extract_count(cyc, n) == count_cyclic(n)
        assert extract_count(dih, n) == count_dihedral(n)


@pytest.mark.parametrize("N", range(1, 11))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_coefficient_sum_and_degree(N, m):
    p = cycle_index_cyclic(N, m)
    assert sum(c for _, c in p) == sum(totient(g) * m ** (N // g) for g in divisors(N))
    for q in (p, cycle_index_dihedral(N, m)):
        assert all(sum(e) == N for e, _ in q)


@pytest.mark.parametrize("N, m", [(6, 2), (8, 3), (12, 2), (9, 3)])
def test_power_sum_power_support(N, m):
    # x^n appears in (X_g)^(N/g) iff g divides every n_j, with weight P(n/g)
    for g in divisors(N):
        p = poly_pow(power_sum(g, m), N // g)
        for n in compositions(N, m):
            if all(k % g == 0 for k in n):
                assert p.coefficient(n) == multinomial([k // g for k in n])
            else:
                assert p.coefficient(n) == 0
