import math

import pytest
from hypothesis import given, strategies as st

from necklaces.numtheory import divisors, gcd_tuple, multinomial, totient
from oracles import divisors_scan, multinomial_factorials, totient_scan


@pytest.mark.parametrize("t, expected", [
    ((0, 0), 1),
    ((3, 6), 84),
    ((1, 1, 2), 12),
    ((2, -1), 0),
    ((), 1),
])
def test_multinomial_examples(t, expected):
    assert multinomial(t) == expected


@pytest.mark.parametrize("t", [(3, 6), (1, 1, 2), (5, 5, 5), (0, 7, 2)])
def test_multinomial_matches_factorials(t):
    assert multinomial(t) == multinomial_factorials(t)


@pytest.mark.parametrize("g, expected", [(1, 1), (9, 6), (12, 4)])
def test_totient_examples(g, expected):
    assert totient(g) == expected == totient_scan(g)


@pytest.mark.parametrize("n, expected", [(1, [1]), (12, [1, 2, 3, 4, 6, 12]), (9, [1, 3, 9])])
def test_divisors_examples(n, expected):
    assert divisors(n) == expected == divisors_scan(n)


@pytest.mark.parametrize("n, expected", [((5,), 5), ((6, 9, 3), 3), ((3, 6), 3), ((0, 4, 6), 2)])
def test_gcd_tuple_examples(n, expected):
    assert gcd_tuple(n) == expected


@pytest.mark.parametrize("fn", [totient, divisors])
def test_zero_rejected(fn):
    with pytest.raises(ValueError):
        fn(0)


def test_gcd_tuple_rejects_all_zero():
    with pytest.raises(ValueError):
        gcd_tuple((0, 0))


small_tuples = st.lists(st.integers(0, 40), min_size=0, max_size=6)


@given(small_tuples)
def test_multinomial_times_factorials_is_total_factorial(t):
    assert multinomial(t) * math.prod(math.factorial(k) for k in t) == math.factorial(sum(t))


@given(small_tuples, st.randoms())
def test_multinomial_permutation_invariant(t, rnd):
    shuffled = list(t)
    rnd.shuffle(shuffled)
    assert multinomial(shuffled) == multinomial(t)


def test_totient_sums_over_divisors():
    for n in range(1, 10**4 + 1):
        assert sum(totient(d) for d in divisors(n)) == n


def test_divisors_exact_for_range():
    for n in range(1, 10**4 + 1):
        ds = divisors(n)
        assert ds == sorted(set(ds)) and ds[0] == 1 and ds[-1] == n
        small = {d for d in range(1, math.isqrt(n) + 1) if n % d == 0}
        assert set(ds) == small | {n // d for d in small}


def test_totient_matches_scan():
    for g in range(1, 400):
        assert totient(g) == totient_scan(g)


@given(st.lists(st.integers(0, 500), min_size=1, max_size=6).filter(any))
def test_gcd_tuple_divides_entries(t):
    g = gcd_tuple(t)
    assert all(x % g == 0 for x in t)
