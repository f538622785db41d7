"""Both kernel backends against each other and against plain set arithmetic."""
import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _brute import disj_pairs, has_matching, k_sets
from supersat import kernels
from supersat.oracle import kneser_bits

BACKENDS = [kernels.python_backend] + ([kernels.compiled_backend] if kernels.compiled_backend else [])
IDS = [b.__name__.rsplit(".", 1)[-1] for b in BACKENDS]


def masks_of(family):
    return np.array([sum(1 << (e - 1) for e in s) for s in family], dtype=np.uint64)


def test_dispatch_names_backend():
    assert kernels.BACKEND_NAME in ("cython", "python")
    assert kernels.backend in BACKENDS


@pytest.mark.parametrize("b", BACKENDS, ids=IDS)
def test_empty_inputs(b):
    empty = np.array([], dtype=np.uint64)
    assert b.count_disjoint_pairs(empty) == 0
    assert b.count_cross_disjoint(empty, masks_of([{1}])) == 0
    assert b.zeta_disjoint_pairs(empty, 4) == 0


@pytest.mark.parametrize("b", BACKENDS, ids=IDS)
def test_small_family(b):
    fam = [{1, 2}, {3, 4}, {1, 3}]
    assert b.count_disjoint_pairs(masks_of(fam)) == 1
    assert b.zeta_disjoint_pairs(masks_of(fam), 4) == 1


family_st = st.integers(3, 10).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.frozensets(st.integers(1, n), min_size=1, max_size=n), unique=True, max_size=40),
    )
)


@settings(max_examples=60, deadline=None)
@given(family_st)
def test_pair_counts_agree(data):
    n, fam = data
    expected = disj_pairs(fam)
    m = masks_of(fam)
    for b in BACKENDS:
        assert b.count_disjoint_pairs(m) == expected
        assert b.zeta_disjoint_pairs(m, n) == expected


@settings(max_examples=40, deadline=None)
@given(family_st, st.data())
def test_cross_counts_agree(data, draw):
    n, fam = data
    other = draw.draw(st.lists(st.frozensets(st.integers(1, n), min_size=1), max_size=20))
    expected = sum(1 for a in fam for b in other if not a & b)
    for b in BACKENDS:
        assert b.count_cross_disjoint(masks_of(fam), masks_of(other)) == expected


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2)])
def test_subset_edge_counts(n, k):
    _, adj = kneser_bits(n, k)
    N = len(adj)
    level = k_sets(n, k)
    ref = [disj_pairs([level[i] for i in range(N) if S >> i & 1]) for S in range(1 << N)]
    for b in BACKENDS:
        assert list(b.subset_edge_counts(adj, N)) == ref


@pytest.mark.parametrize("s", [2, 4, 6, 8])
def test_min_edges_search_agrees(s):
    _, adj = kneser_bits(6, 2)
    results = [b.min_edges_search(adj, s, [0], 1, 100, True, 100, None, 5) for b in BACKENDS]
    level = k_sets(6, 2)
    best = min(disj_pairs([level[0], *sub]) for sub in itertools.combinations(level[1:], s - 1))
    for r in results:
        assert r[0] == best and r[3]
    assert len({r[:2] for r in results}) == 1


@pytest.mark.parametrize("n,k,s", [(4, 2, 2), (4, 2, 3), (5, 2, 3), (6, 2, 3)])
def test_count_matching_free(n, k, s):
    level = k_sets(n, k)
    masks = [int(x) for x in masks_of(level)]
    if len(level) <= 10:
        from _brute import all_families
        expected = sum(1 for F in all_families(n, k) if not has_matching(F, s))
    else:
        expected = kernels.python_backend.count_matching_free(masks, s)
    for b in BACKENDS:
        assert b.count_matching_free(masks, s) == expected


def test_pure_python_switch():
    import os
    import subprocess
    import sys
    code = ("from supersat import kernels, lex_segment, disj_naive;"
            "print(kernels.BACKEND_NAME, disj_naive(lex_segment(6, 2, 9)))")
    env = dict(os.environ, SUPERSAT_PURE_PYTHON="1")
    res = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env)
    assert res.returncode == 0 and res.stdout.split() == ["python", "12"]
