import itertools
import random
from fractions import Fraction

import pytest

from _brute import all_families, binom, has_matching, k_sets
from supersat.setfam import SetFamily, full_level, lex_segment, mask_of, star
from supersat.structcount import (
    SetPairSystem, bollobas_check, closure_I, count_no_matching_families,
    enumerate_maximal_families, generator_set_pairs, hilton_milner_bound, is_maximal,
    kk_lower_bound, max_matching_size, minimal_generating, pq_shadow_check, shadow,
    typicality_report,
)


def fam(n, k, sets):
    return SetFamily.from_sets(n, k, sets)


def test_shadow_examples():
    S = shadow(fam(4, 3, [{1, 2, 3}, {1, 2, 4}]), 2)
    assert set(S.sets()) == {(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)}
    F = lex_segment(7, 3, 12)
    assert shadow(F, 3).members == F.members
    with pytest.raises(ValueError):
        shadow(F, 4)


def test_kk_bound_examples():
    assert kk_lower_bound(binom(5, 3), 3, 2) == 10
    assert kk_lower_bound(1, 4, 2) == 6
    assert abs(kk_lower_bound(7, 2, 1) - 4.2749) < 1e-4


def test_kk_bound_on_random_families():
    rng = random.Random(2)
    for _ in range(500):
        n = rng.randint(3, 12)
        k = rng.randint(2, min(4, n - 1))
        level = k_sets(n, k)
        F = fam(n, k, rng.sample(level, rng.randint(1, min(60, len(level)))))
        for s in range(1, k):
            assert len(shadow(F, s)) >= kk_lower_bound(len(F), k, s) - 1e-6


def test_hilton_milner_bound():
    assert hilton_milner_bound(7, 3) == 13
    assert hilton_milner_bound(5, 2) == 3
    for k in range(2, 6):
        assert hilton_milner_bound(2 * k + 1, k) == binom(2 * k, k - 1) - binom(k, k - 1) + 1


def brute_max_matching(sets):
    for t in range(len(sets), 0, -1):
        if has_matching(sets, t):
            return t
    return 0


def test_max_matching_size():
    assert max_matching_size(fam(6, 2, [{1, 2}, {3, 4}, {5, 6}])) == 3
    assert max_matching_size(star(6, 3, 4)) == 1
    F = lex_segment(8, 2, 13)
    assert max_matching_size(F) == brute_max_matching([frozenset(s) for s in F.sets()])


def test_count_no_matching_families():
    assert count_no_matching_families(4, 2, 2) == 27
    brute = sum(1 for F in all_families(5, 2) if not has_matching(F, 2))
    assert count_no_matching_families(5, 2, 2) == 76 == brute
    assert count_no_matching_families(6, 3, 2) == 3 ** 10
    assert count_no_matching_families(4, 2, 3) == sum(1 for F in all_families(4, 2) if not has_matching(F, 3))


def brute_maximal(n, k, s):
    out = []
    level = k_sets(n, k)
    for F in all_families(n, k):
        if has_matching(F, s):
            continue
        if all(has_matching(F + [x], s) for x in level if x not in F):
            out.append(sorted(tuple(sorted(x)) for x in F))
    return sorted(out)


@pytest.mark.parametrize("n,k,s", [(4, 2, 2), (5, 2, 2), (4, 2, 3), (5, 2, 3)])
def test_enumerate_maximal_matches_brute(n, k, s):
    got = sorted(sorted(F.sets()) for F in enumerate_maximal_families(n, k, s))
    assert got == brute_maximal(n, k, s)


def test_maximal_family_examples():
    assert len(enumerate_maximal_families(4, 2, 2)) == 8
    fams = enumerate_maximal_families(5, 2, 2)
    stars = [F for F in fams if len(F) == 4]
    triangles = [F for F in fams if len(F) == 3]
    assert len(stars) == 5 and len(triangles) == 10
    for n in range(3, 7):
        for s in (2, 3):
            assert len(enumerate_maximal_families(n, 2, s)) <= binom(n, 2) ** binom(2 * s, 2)


def test_closure_and_generators():
    assert closure_I(SetFamily(5, 2, ()), 2).members == full_level(5, 2).members
    S = star(4, 2, 1)
    G0 = minimal_generating(S, 2)
    assert len(G0) == 3 <= binom(4, 2)
    assert closure_I(G0, 2).members == S.members
    for F in enumerate_maximal_families(5, 2, 2):
        G0 = minimal_generating(F, 2)
        assert len(G0) <= 6
        assert closure_I(G0, 2).members == F.members


@pytest.mark.parametrize("n,s", [(4, 2), (5, 2), (6, 2), (4, 3), (5, 3), (6, 3)])
def test_generators_are_minimal_and_bounded(n, s):
    for F in enumerate_maximal_families(n, 2, s):
        G0 = minimal_generating(F, s)
        assert closure_I(G0, s).members == F.members
        assert len(G0) <= binom(2 * s, 2)
        # dropping any member changes the closure
        for i in range(len(G0)):
            rest = G0.members[:i] + G0.members[i + 1:]
            assert closure_I(rest, s, n, 2).members != F.members
        valid, m, bound = bollobas_check(generator_set_pairs(G0, s))
        assert valid and m == len(G0) and m <= bound


def test_bollobas_check():
    assert bollobas_check(SetPairSystem.of([({1}, {2}), ({2}, {1})])) == (True, 2, 2)
    assert bollobas_check(SetPairSystem.of([({1, 2}, {3})]))[0]
    assert bollobas_check(SetPairSystem.of([({1}, {2}), ({3}, {4})]))[0] is False
    with pytest.raises(ValueError):
        SetPairSystem.of([({1}, {1})])


def test_typicality():
    rep = typicality_report(700, 3, 2)
    assert rep.target == Fraction(-700 * binom(6, 3), 18)
    assert rep.target_applies and rep.margin <= rep.target and rep.meets_target
    assert typicality_report(624, 3, 2).margin < 0
    low = typicality_report(619, 3, 2)
    assert not low.target_applies and low.meets_target is None
    assert typicality_report(700, 3, 2).T == 700
    for n in range(620, 1001):
        assert typicality_report(n, 3, 2).meets_target


def test_pq_shadow_examples():
    assert pq_shadow_check(star(6, 3, 2))
    assert pq_shadow_check(fam(5, 2, [{1, 2}, {1, 3}, {2, 3}]))
    with pytest.raises(ValueError):
        pq_shadow_check(fam(5, 2, [{1, 2}]))


@pytest.mark.slow
def test_pq_shadow_all_maximal_73():
    fams = enumerate_maximal_families(7, 3, 2)
    assert all(pq_shadow_check(F) for F in fams)
    non_star = [len(F) for F in fams if not any(all(m >> c & 1 for m in F.members) for c in range(7))]
    assert max(non_star) == hilton_milner_bound(7, 3)


def test_is_maximal():
    assert is_maximal(star(5, 2, 1), 2)
    assert not is_maximal(fam(5, 2, [{1, 2}]), 2)
    tri = SetFamily(5, 2, tuple(mask_of(c) for c in itertools.combinations([1, 2, 3], 2)))
    assert is_maximal(tri, 2)
