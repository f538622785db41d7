"""Slow, obviously-correct reference computations on plain Python sets and tuples.

Nothing here imports the package, so agreement with these is an independent check.
"""
import itertools
from math import comb, factorial


def k_sets(n, k):
    return [frozenset(c) for c in itertools.combinations(range(1, n + 1), k)]


def lex_first(n, k, s):
    return k_sets(n, k)[:s]


def disj_pairs(family):
    fam = list(family)
    return sum(1 for a, b in itertools.combinations(fam, 2) if not a & b)


def perms(n):
    return list(itertools.permutations(range(1, n + 1)))


def disjoint_perm(p, q):
    return all(a != b for a, b in zip(p, q))


def disj_perm_pairs(family):
    fam = list(family)
    return sum(1 for a, b in itertools.combinations(fam, 2) if disjoint_perm(a, b))


def derangements(n):
    return sum(1 for p in perms(n) if all(p[i] != i + 1 for i in range(n)))


def in_cosets(p, points):
    return any(p[i - 1] == j for i, j in points)


def union(n, points):
    return [p for p in perms(n) if in_cosets(p, points)]


def all_families(n, k):
    level = k_sets(n, k)
    for bits in range(1 << len(level)):
        yield [level[i] for i in range(len(level)) if bits >> i & 1]


def has_matching(family, s):
    return any(
        all(not a & b for a, b in itertools.combinations(sub, 2))
        for sub in itertools.combinations(family, s)
    )


def min_disj(n, k, s):
    return min(disj_pairs(sub) for sub in itertools.combinations(k_sets(n, k), s))


def binom(n, k):
    return comb(n, k) if 0 <= k <= n else 0


def fact(n):
    return factorial(n)
