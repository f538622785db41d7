import itertools

import pytest

from _brute import binom, disj_pairs, disj_perm_pairs, k_sets, min_disj, perms
from supersat.oracle import (
    closed_form_counterexample, dedupe_set_witnesses, duality_check, independence_number,
    katona_check, kneser_bits, min_disj_perms, min_disj_sets, verify_counterexample,
)
from supersat.verify import lex_theorem_applies


def test_independence_number():
    _, adj = kneser_bits(5, 2)
    assert independence_number(adj) == 4
    _, adj = kneser_bits(7, 3)
    assert independence_number(adj) == 15


def test_min_disj_sets_examples():
    rep = min_disj_sets(4, 2, 4)
    assert rep.minimum == 1 == min_disj(4, 2, 4) and rep.lex_or_T_optimal
    rep = min_disj_sets(5, 2, 5)
    assert rep.minimum == 2 == binom(2, 1)
    for s in range(binom(5, 1) + 1):
        assert min_disj_sets(6, 2, s).minimum == 0


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (6, 2)])
def test_min_disj_sets_matches_brute(n, k):
    for s in range(binom(n, k) + 1):
        if binom(binom(n, k), s) > 6000:
            continue
        rep = min_disj_sets(n, k, s)
        assert rep.minimum == min_disj(n, k, s)
        assert rep.minimum <= rep.lex_or_T_value
        assert rep.lex_or_T_optimal == (rep.minimum == rep.lex_or_T_value)
        level = k_sets(n, k)
        count = sum(1 for sub in itertools.combinations(level, s) if disj_pairs(sub) == rep.minimum)
        assert rep.num_minimizers == count


def test_witnesses_are_minimisers():
    rep = min_disj_sets(6, 2, 10)
    assert rep.minimum == 15 and not rep.lex_or_T_optimal
    for w in rep.sample_minimizers:
        assert len(w) == 10
        assert disj_pairs([frozenset(s) for s in w]) == 15
    assert not lex_theorem_applies(6, 2, 10)


def test_dedupe_relabelling():
    masks, _ = kneser_bits(4, 2)
    # two stars are the same family up to relabelling
    star1 = sum(1 << i for i, m in enumerate(masks) if m & 1)
    star2 = sum(1 << i for i, m in enumerate(masks) if m & 2)
    assert len(dedupe_set_witnesses(4, 2, masks, [star1, star2])) == 1


def test_min_disj_perms():
    rep = min_disj_perms(3, 3)
    assert rep.minimum == 1 and rep.lex_or_T_optimal
    best = min(disj_perm_pairs(sub) for sub in itertools.combinations(perms(3), 3))
    assert best == 1
    rep = min_disj_perms(4, 12)
    assert rep.minimum == 18 == rep.lex_or_T_value
    for s in range(7):
        assert min_disj_perms(4, s).minimum == 0
    for s in range(7):
        rep = min_disj_perms(3, s)
        assert rep.minimum == min(disj_perm_pairs(sub) for sub in itertools.combinations(perms(3), s))
    with pytest.raises(ValueError):
        min_disj_perms(5, 3)


def test_katona():
    for n, k in [(5, 2), (6, 2), (7, 2)]:
        rep = katona_check(n, k)
        assert rep.minimum == rep.extra["expected"] == binom(n - k - 1, k - 1)


def test_duality():
    rep = duality_check(4, 2)
    assert rep.ok and rep.min_by_size[4] == 1 and rep.min_by_size[2] == 0
    assert rep.min_by_size[0] == rep.min_by_size[6] - 3 == 0
    assert duality_check(5, 2).ok
    with pytest.raises(ValueError):
        duality_check(7, 3, cap=24)


def test_counterexample_k5_k6():
    t = verify_counterexample(5)
    assert (t.disj_F, t.disj_L, t.gap) == (8694, 8750, 56)
    assert t.F_below_L and t.balls_above_L
    assert all(b.disj > 8750 and b.inner_lower_bound <= b.disj for b in t.balls)
    t6 = verify_counterexample(6)
    assert t6.F_below_L and t6.balls_above_L and t6.gap == t6.gap_expected
    with pytest.raises(ValueError):
        verify_counterexample(9)


def test_closed_form_counterexample():
    row = closed_form_counterexample(5)
    assert row["disj_F"] == 8694 and row["disj_L"] == 8750 and row["s"] == 840
    for k in range(5, 16):
        row = closed_form_counterexample(k)
        assert row["gap"] == (binom(2 * k - 1, k) - 1) - (binom(2 * k - 2, k - 1) - 1) > 0
