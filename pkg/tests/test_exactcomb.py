from fractions import Fraction

import pytest

from _brute import derangements as brute_derangements
from supersat.exactcomb import (
    binom, derangement_count, derangements, derangements_inclusion_exclusion, factorial,
    gen_binom, lovasz_root,
)


@pytest.mark.parametrize("n,expected", [(0, 1), (4, 24), (10, 3628800)])
def test_factorial(n, expected):
    assert factorial(n) == expected


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binom_examples():
    assert binom(5, 2) == 10
    assert binom(4, 5) == 0
    assert binom(4, -1) == 0
    assert binom(43, 14) == factorial(43) // (factorial(14) * factorial(29))


def test_derangement_table():
    t = derangements(6)
    assert t.d[4] == 9 == brute_derangements(4)
    assert t.d[1] == 0 and t.d[0] == 1
    assert t.D[4] == 11 and t.Dp[4] == 13
    for n in range(1, 7):
        assert t.d[n] == brute_derangements(n)


def test_recurrence_matches_inclusion_exclusion():
    t = derangements(200)
    for n in range(0, 201):
        assert t.d[n] == derangements_inclusion_exclusion(n) == derangement_count(n)
    for n in range(1, 201):
        assert t.d[n] == (n - 1) * t.D[n - 1]


def test_gen_binom():
    assert gen_binom(Fraction(9, 2), 2) == Fraction(63, 8)
    assert gen_binom(Fraction(7, 3), 0) == 1
    for m in range(61):
        for r in range(m + 1):
            assert gen_binom(m, r) == binom(m, r)


def test_lovasz_root_examples():
    assert lovasz_root(10, 2) == 5
    assert lovasz_root(1, 3) == 3
    x = lovasz_root(7, 2)
    # x(x-1) = 14
    assert abs(x - (1 + (1 + 56) ** 0.5) / 2) < 1e-9
    assert abs(x - 4.2749) < 1e-4


def test_lovasz_root_integral_inputs():
    for m in range(3, 41):
        for r in range(3, m + 1):
            assert lovasz_root(binom(m, r), r) == m
