"""Permutation families, cosets and exact disjoint-pair engines.

A permutation of [n] is a tuple of images ``(pi(1), ..., pi(n))``. Two
permutations are disjoint when they disagree at every position. For n <= 8 a
permutation packs into a 64-bit mask with bit ``(i-1)*n + pi(i)-1``; disjoint
permutations are exactly those whose masks do not meet, so the set kernels
count permutation pairs too.

Cosets T(i,j) = {pi : pi(i) = j} are named by grid points. A set of points is a
clique when all rows and all columns are distinct, which is exactly when the
cosets have a common member; the exact engines below run inclusion-exclusion
over cliques and so work for any n without enumerating S_n.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .exactcomb import binom, derangement_count, factorial

Perm = tuple
Point = tuple

DEFAULT_PERM_CAP = 8
MAX_SPEC_POINTS = 12


def check_perm(p: Sequence[int], n: int | None = None) -> Perm:
    p = tuple(int(x) for x in p)
    m = len(p) if n is None else n
    if len(p) != m or sorted(p) != list(range(1, m + 1)):
        raise ValueError(f"{p} is not a permutation of [{m}]")
    return p


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p, 1):
        inv[v - 1] = i
    return tuple(inv)


def perm_disjoint(sigma: Perm, pi: Perm) -> bool:
    if len(sigma) != len(pi):
        raise ValueError("permutations of different sizes")
    return all(a != b for a, b in zip(sigma, pi))


def perm_mask(p: Perm) -> int:
    n = len(p)
    m = 0
    for i, v in enumerate(p):
        m |= 1 << (i * n + v - 1)
    return m


@dataclass(frozen=True)
class PermFamily:
    """Duplicate-free permutations of [n] in lexicographic order."""

    n: int
    members: tuple

    def __post_init__(self):
        mem = tuple(sorted({check_perm(p, self.n) for p in self.members}))
        if len(mem) != len(self.members):
            raise ValueError("duplicate members")
        object.__setattr__(self, "members", mem)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def masks(self) -> list[int]:
        if self.n > DEFAULT_PERM_CAP:
            raise ValueError("mask packing needs n <= 8")
        return [perm_mask(p) for p in self.members]


def _trusted(n, members) -> PermFamily:
    fam = object.__new__(PermFamily)
    object.__setattr__(fam, "n", n)
    object.__setattr__(fam, "members", tuple(members))
    return fam


def _check_cap(n, cap):
    if n > cap:
        raise ValueError(f"n = {n} exceeds the enumeration cap {cap}")


def all_perms(n: int, cap: int = DEFAULT_PERM_CAP) -> PermFamily:
    _check_cap(n, cap)
    return _trusted(n, itertools.permutations(range(1, n + 1)))


def lex_perm_segment(n: int, s: int, cap: int = DEFAULT_PERM_CAP) -> PermFamily:
    """The first s permutations of [n] in lexicographic order of images."""
    _check_cap(n, cap)
    if not 0 <= s <= factorial(n):
        raise ValueError(f"s = {s} outside [0, {n}!]")
    return _trusted(n, itertools.islice(itertools.permutations(range(1, n + 1)), s))


def disj_perm(F: PermFamily) -> int:
    """Unordered disjoint pairs in F."""
    if len(F) < 2:
        return 0
    if F.n <= DEFAULT_PERM_CAP:
        return kernels.count_disjoint_pairs(F.masks())
    mem = F.members
    return sum(perm_disjoint(mem[i], mem[j]) for i in range(len(mem)) for j in range(i + 1, len(mem)))


def disj_T_formula(n: int, s: int) -> int:
    """disj of the first s permutations: C(l,2)(n-1)! D_{n-1} + l r D_{n-1}, s = l (n-1)! + r."""
    if not 0 <= s <= factorial(n):
        raise ValueError(f"s = {s} outside [0, {n}!]")
    if n == 1:
        return 0
    l, r = divmod(s, factorial(n - 1))
    D = derangement_count(n - 1) + derangement_count(n - 2)
    return binom(l, 2) * factorial(n - 1) * D + l * r * D


# -- coset specifications -----------------------------------------------------

@dataclass(frozen=True)
class CosetSpec:
    n: int
    points: tuple

    def __post_init__(self):
        pts = tuple((int(i), int(j)) for i, j in self.points)
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points")
        for i, j in pts:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"point {(i, j)} outside [{self.n}]^2")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)


def is_clique(points: Iterable[Point]) -> bool:
    pts = list(points)
    return len({i for i, _ in pts}) == len(pts) == len({j for _, j in pts})


def clique(points: Iterable[Point]) -> tuple:
    """Validate and return a clique label as a sorted tuple of points."""
    pts = tuple(sorted(set(points)))
    if not is_clique(pts):
        raise ValueError(f"{pts} is not a clique: rows and columns must be distinct")
    return pts


def cliques(points: Sequence[Point], include_empty: bool = False) -> list[tuple]:
    """All cliques among the points, ordered by size then lexicographically."""
    pts = sorted(points)
    out = []

    def grow(start, cur, rows, cols):
        out.append(tuple(cur))
        for idx in range(start, len(pts)):
            i, j = pts[idx]
            if i in rows or j in cols:
                continue
            cur.append(pts[idx])
            grow(idx + 1, cur, rows | {i}, cols | {j})
            cur.pop()

    grow(0, [], frozenset(), frozenset())
    if not include_empty:
        out = out[1:]
    out.sort(key=lambda c: (len(c), c))
    return out


def coset_members(n: int, i: int, j: int, cap: int = DEFAULT_PERM_CAP) -> PermFamily:
    _check_cap(n, cap)
    return _trusted(n, (p for p in itertools.permutations(range(1, n + 1)) if p[i - 1] == j))


def union_members(spec: CosetSpec, cap: int = DEFAULT_PERM_CAP) -> PermFamily:
    _check_cap(spec.n, cap)
    pts = spec.points
    return _trusted(spec.n, (p for p in itertools.permutations(range(1, spec.n + 1))
                             if any(p[i - 1] == j for i, j in pts)))


def in_union(pi: Perm, points: Iterable[Point]) -> bool:
    return any(pi[i - 1] == j for i, j in points)


# -- exact engines --------------------------------------------------------------

def exact_intersection_size(X: Sequence[Point], n: int) -> int:
    """|common members of the cosets in X| = (n - |X|)! for a clique X."""
    X = clique(X)
    return factorial(n - len(X))


@lru_cache(maxsize=65536)
def _avoid_count(N: int, m: int) -> int:
    # permutations of an N-set avoiding m prescribed position/value matches
    return sum((-1) ** i * binom(m, i) * factorial(N - i) for i in range(m + 1))


def clique_overlap(pi: Perm, X: Sequence[Point]) -> int:
    """c = |X| - |{rows of X} & {pi^-1(columns of X)}|."""
    inv = inverse(pi)
    rows = {i for i, _ in X}
    back = {inv[j - 1] for _, j in X}
    return len(X) - len(rows & back)


def exact_disj_to_clique(pi: Perm, X: Sequence[Point]) -> int:
    """Members of the clique intersection that are disjoint from pi."""
    X = clique(X)
    n = len(pi)
    if in_union(pi, X):
        raise ValueError("pi lies in a coset of X")
    l = len(X)
    c = clique_overlap(pi, X)
    return _avoid_count(n - l, n - l - c)


def exact_disj_to_union(pi: Perm, spec: CosetSpec, max_size: int | None = None) -> int:
    """Members of the union disjoint from pi, by inclusion-exclusion over cliques.

    ``max_size`` truncates the sum after cliques of that size (Bonferroni);
    odd truncations bound the exact value above, even ones below.
    """
    pi = check_perm(pi, spec.n)
    if in_union(pi, spec.points):
        raise ValueError("pi lies in the union")
    total = 0
    for X in cliques(spec.points):
        if max_size is not None and len(X) > max_size:
            break
        term = exact_disj_to_clique(pi, X)
        total += term if len(X) % 2 else -term
    return total


def exact_union_size(spec: CosetSpec) -> int:
    total = 0
    for X in cliques(spec.points):
        term = factorial(spec.n - len(X))
        total += term if len(X) % 2 else -term
    return total


@lru_cache(maxsize=1 << 16)
def _matched_sum(p: int, q: int, A: int, B: int) -> int:
    """sum_j (-1)^j C(p,j) C(q,j) j! (A-j)! (B-j)!"""
    top = min(p, q, A, B)
    term = factorial(A) * factorial(B)
    total = 0
    for j in range(top + 1):
        total += -term if j & 1 else term
        if j < top:
            # C(p,j+1)C(q,j+1)(j+1)! / (C(p,j)C(q,j)j!) = (p-j)(q-j)/(j+1)
            term = term * (p - j) * (q - j) // ((j + 1) * (A - j) * (B - j))
    return total


def exact_cross_clique_disj(X: Sequence[Point], Y: Sequence[Point], n: int) -> int:
    """Ordered pairs (sigma, pi), sigma in all cosets of X, pi in all cosets of Y, disjoint.

    Inclusion-exclusion over the set of positions where the two agree. A
    position fixed by both never contributes unless the values coincide (then
    nothing is disjoint). A position fixed only by X can agree only if its value
    is free for the Y side, and symmetrically; positions fixed by neither
    agree on a value that neither side prescribes.
    """
    X, Y = clique(X), clique(Y)
    if set(X) & set(Y):
        return 0
    RX, CX = {i for i, _ in X}, {j for _, j in X}
    RY, CY = {i for i, _ in Y}, {j for _, j in Y}
    alpha = sum(1 for i, j in X if i not in RY and j not in CY)
    beta = sum(1 for i, j in Y if i not in RX and j not in CX)
    p = n - len(RX | RY)
    q = n - len(CX | CY)
    total = 0
    for a in range(alpha + 1):
        for b in range(beta + 1):
            term = binom(alpha, a) * binom(beta, b) * _matched_sum(p, q, n - len(X) - b, n - len(Y) - a)
            total += -term if (a + b) & 1 else term
    return total


def exact_disj_within_union(spec: CosetSpec, max_points: int = MAX_SPEC_POINTS) -> int:
    """disj of the union of cosets, exact at any n."""
    if len(spec) > max_points:
        raise ValueError(f"{len(spec)} points exceed the cap {max_points}")
    cl = cliques(spec.points)
    total = 0
    for ai, X in enumerate(cl):
        for Y in cl[ai:]:
            v = exact_cross_clique_disj(X, Y, spec.n)
            if X != Y:
                v *= 2  # the pair (Y, X) gives the same count
            total += -v if (len(X) + len(Y)) & 1 else v
    assert total % 2 == 0
    return total // 2


def mx_class_size(spec: CosetSpec, X: Sequence[Point]) -> int:
    """Members of the union lying in exactly the cosets of X."""
    X = clique(X)
    if not set(X) <= set(spec.points):
        raise ValueError("X must be a subset of the spec points")
    rows, cols = {i for i, _ in X}, {j for _, j in X}
    rest = [pt for pt in spec.points if pt not in X and pt[0] not in rows and pt[1] not in cols]
    total = 0
    for Z in cliques(rest, include_empty=True):
        term = factorial(spec.n - len(X) - len(Z))
        total += -term if len(Z) & 1 else term
    return total


# -- brute force references (n <= 8) ------------------------------------------

def brute_disj_to_family(pi: Perm, members: Iterable[Perm]) -> int:
    return sum(1 for s in members if perm_disjoint(pi, s))


def brute_cross_disj(A: PermFamily, B: PermFamily) -> int:
    return kernels.count_cross_disjoint(A.masks(), B.masks())


def clique_members(X: Sequence[Point], n: int, cap: int = DEFAULT_PERM_CAP) -> PermFamily:
    _check_cap(n, cap)
    X = clique(X)
    return _trusted(n, (p for p in itertools.permutations(range(1, n + 1))
                        if all(p[i - 1] == j for i, j in X)))


# -- derangement graph ----------------------------------------------------------

def derangement_graph(n: int, cap: int = 6) -> np.ndarray:
    """Dense 0/1 adjacency of the derangement graph on S_n, vertices in lex order."""
    _check_cap(n, cap)
    P = np.array(list(itertools.permutations(range(n))), dtype=np.int8)
    A = np.ones((len(P), len(P)), dtype=bool)
    for i in range(n):
        A &= P[:, i][:, None] != P[:, i][None, :]
    return A.astype(np.int8)


def derangement_graph_bits(n: int) -> list[int]:
    """Int-bitmask adjacency for the branch-and-bound search (n <= 4 gives <= 24 vertices)."""
    A = derangement_graph(n, cap=5)
    if len(A) > 64:
        raise ValueError("graph too large for word-sized search")
    return [int(sum(1 << j for j in np.nonzero(row)[0])) for row in A]


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    d_n: int
    lambda0: float
    lambda1: float
    lambda1_expected: float
    lambda2_abs: float
    lambda2_ratio: float
    lambda0_ok: bool
    lambda1_ok: bool
    method: str
    cross_check_max_diff: float


def derangement_graph_spectrum(n: int, cap: int = 6, rel_tol: float = 1e-6) -> SpectrumReport:
    """Eigenvalues of the derangement graph; checks the top and bottom ones.

    lambda2 is the largest modulus left after removing one copy of d_n and
    (n-1)^2 copies of -d_n/(n-1); its ratio |lambda2| n^2 / d_n is reported only.
    """
    from .spectral import symmetric_eigenvalues

    if n < 2:
        raise ValueError("need n >= 2")
    _check_cap(n, cap)
    A = derangement_graph(n, cap).astype(float)
    ev, method = symmetric_eigenvalues(A)
    ref = np.linalg.eigvalsh(A)
    diff = float(np.max(np.abs(np.sort(ev) - ref)))
    d = derangement_count(n)
    tol = rel_tol * d
    lam1 = -d / (n - 1)
    ev = np.sort(ev)
    rest = list(ev)
    rest.remove(min(rest, key=lambda x: abs(x - d)))
    for _ in range((n - 1) ** 2):
        near = min(rest, key=lambda x: abs(x - lam1))
        if abs(near - lam1) > tol:
            break
        rest.remove(near)
    lam2 = float(max((abs(x) for x in rest), default=0.0))
    return SpectrumReport(
        n, d, float(ev[-1]), float(ev[0]), lam1, lam2, lam2 * n * n / d,
        bool(abs(ev[-1] - d) <= tol), bool(abs(ev[0] - lam1) <= tol), method, diff,
    )
