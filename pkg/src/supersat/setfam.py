"""k-uniform set families over [n] stored as 64-bit masks.

Element ``e`` of [n] is bit ``e - 1``. Families keep their members in
lexicographic order of the increasing element tuples, so the first
C(n-1, k-1) sets of the full level are exactly the star of 1.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .exactcomb import binom

MAX_N = 64
DEFAULT_ZETA_CAP = 28


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free family of k-subsets of [n] in canonical lex order."""

    n: int
    k: int
    members: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.k <= self.n <= MAX_N:
            raise ValueError(f"need 1 <= k <= n <= {MAX_N}, got n={self.n}, k={self.k}")
        full = (1 << self.n) - 1
        for m in self.members:
            if m & ~full or popcount(m) != self.k:
                raise ValueError(f"{elements_of(m)} is not a {self.k}-subset of [{self.n}]")
        ordered = tuple(sorted(set(self.members), key=elements_of))
        if len(ordered) != len(self.members):
            raise ValueError("duplicate members")
        object.__setattr__(self, "members", ordered)

    @classmethod
    def from_sets(cls, n: int, k: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        return cls(n, k, tuple(mask_of(s) for s in sets))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask) -> bool:
        return mask in self._member_set

    @property
    def _member_set(self) -> frozenset:
        cached = self.__dict__.get("_cache_set")
        if cached is None:
            cached = frozenset(self.members)
            object.__setattr__(self, "_cache_set", cached)
        return cached

    def sets(self) -> list[tuple[int, ...]]:
        return [elements_of(m) for m in self.members]

    def masks(self) -> np.ndarray:
        return np.array(self.members, dtype=np.uint64)


def full_level(n: int, k: int) -> SetFamily:
    return lex_segment(n, k, binom(n, k))


def _lex_masks(n: int, k: int):
    for combo in itertools.combinations(range(n), k):
        m = 0
        for b in combo:
            m |= 1 << b
        yield m


def _trusted(n: int, k: int, masks: Sequence[int]) -> SetFamily:
    # skip validation for families built here in lex order
    fam = object.__new__(SetFamily)
    object.__setattr__(fam, "n", n)
    object.__setattr__(fam, "k", k)
    object.__setattr__(fam, "members", tuple(masks))
    return fam


def lex_segment(n: int, k: int, s: int) -> SetFamily:
    """The first s k-sets of [n] in lexicographic order."""
    if not 1 <= k <= n <= MAX_N:
        raise ValueError("need 1 <= k <= n <= 64")
    if not 0 <= s <= binom(n, k):
        raise ValueError(f"s={s} outside [0, C({n},{k})]")
    return _trusted(n, k, list(itertools.islice(_lex_masks(n, k), s)))


def colex_complement(n: int, k: int, s: int) -> SetFamily:
    """The full level minus lex_segment(n, k, C(n,k) - s): the last s sets in lex order."""
    total = binom(n, k)
    if not 0 <= s <= total:
        raise ValueError(f"s={s} outside [0, C({n},{k})]")
    return _trusted(n, k, list(itertools.islice(_lex_masks(n, k), total - s, None)))


def disj_naive(F: SetFamily) -> int:
    """Unordered disjoint pairs by pairwise AND tests."""
    if len(F) < 2:
        return 0
    return kernels.count_disjoint_pairs(F.members)


def disj_zeta(F: SetFamily, cap: int = DEFAULT_ZETA_CAP) -> int:
    """Disjoint pairs via a subset-sum transform over the 2^n lattice."""
    if F.n > cap:
        raise ValueError(f"n={F.n} exceeds the zeta-transform cap {cap}")
    if len(F) < 2:
        return 0
    return kernels.zeta_disjoint_pairs(F.members, F.n)


def cross_disj(A: Iterable[int], B: Iterable[int]) -> int:
    """Ordered count of pairs (a, b) in A x B with a & b == 0."""
    A, B = list(A), list(B)
    if not A or not B:
        return 0
    return kernels.count_cross_disjoint(A, B)


def lex_parameters(n: int, k: int, s: int) -> tuple[int, Fraction]:
    """(r, gamma) with s = C(n,k) - C(n-r+1,k) + gamma * C(n-r,k-1), r minimal."""
    total = binom(n, k)
    if not 0 <= s <= total:
        raise ValueError(f"s={s} outside [0, C({n},{k})]")
    r = 0
    while s > total - binom(n - r, k):
        r += 1
    if r == 0:
        return 0, Fraction(0)
    base = total - binom(n - r + 1, k)
    return r, Fraction(s - base, binom(n - r, k - 1))


def disj_lex_formula(n: int, k: int, s: int) -> int:
    """disj(L(n,k,s)) by the closed sum over full stars."""
    total = binom(n, k)
    r, _ = lex_parameters(n, k, s)
    return sum(
        (s - (total - binom(n - i, k))) * binom(n - i - k, k - 1) for i in range(1, r)
    )


def star_upper_bound(n: int, k: int, r: int, gamma) -> Fraction:
    if r < 1:
        raise ValueError("r must be positive")
    gamma = Fraction(gamma)
    if not 0 <= gamma <= 1:
        raise ValueError("gamma must lie in [0, 1]")
    return (binom(r - 1, 2) + (r - 1) * gamma) * binom(n - 1, k - 1) * binom(n - k - 1, k - 1)


def quad_upper_bound(s: int, r: int) -> Fraction:
    if r < 1:
        raise ValueError("r must be positive")
    return Fraction(1, 2) * (1 - Fraction(1, r)) * s * s


def _inner_ball_size(n: int, k: int, ell: int, r: int) -> int:
    return sum(binom(r, j) * binom(n - r, k - j) for j in range(ell, k + 1))


def ell_ball(n: int, k: int, ell: int, s: int, r: int | None = None) -> SetFamily:
    """An ell-ball of size s: every set meeting [r] in >= ell points, then boundary
    sets (>= ell points in [r+1]) in lex order until the size is s.

    ``r`` defaults to the least feasible value.
    """
    if not 1 <= ell <= k:
        raise ValueError("need 1 <= ell <= k")
    total = binom(n, k)
    if not 0 <= s <= total:
        raise ValueError(f"s={s} outside [0, C({n},{k})]")
    if r is None:
        r = next(
            (q for q in range(n + 1)
             if _inner_ball_size(n, k, ell, q) <= s <= _inner_ball_size(n, k, ell, min(q + 1, n))),
            None,
        )
    if r is None or not (_inner_ball_size(n, k, ell, r) <= s <= _inner_ball_size(n, k, ell, min(r + 1, n))):
        raise ValueError(f"no ell-ball of size {s} with r={r}")
    inner_mask = (1 << r) - 1
    outer_mask = (1 << min(r + 1, n)) - 1
    inner, boundary = [], []
    for m in _lex_masks(n, k):
        if popcount(m & inner_mask) >= ell:
            inner.append(m)
        elif popcount(m & outer_mask) >= ell:
            boundary.append(m)
    chosen = inner + boundary[: s - len(inner)]
    return SetFamily(n, k, tuple(chosen))


def ball_radius(n: int, k: int, ell: int, s: int) -> int:
    """The least r for which an ell-ball of size s is sandwiched at r."""
    for q in range(n + 1):
        if _inner_ball_size(n, k, ell, q) <= s <= _inner_ball_size(n, k, ell, min(q + 1, n)):
            return q
    raise ValueError("no feasible r")


def inner_ball(n: int, k: int, ell: int, r: int) -> SetFamily:
    m_r = (1 << r) - 1
    return _trusted(n, k, [m for m in _lex_masks(n, k) if popcount(m & m_r) >= ell])


def counterexample_family(k: int) -> SetFamily:
    """Star at 1 without {1, 2k+1, ..., 3k-1}, plus every k-subset of {2, ..., 2k}.

    Over n = 3k - 1; size C(3k-2, k-1) + C(2k-1, k) - 1.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    n = 3 * k - 1
    if n > MAX_N:
        raise ValueError(f"n = {n} exceeds {MAX_N}")
    removed = mask_of([1, *range(2 * k + 1, 3 * k)])
    members = [m for m in _lex_masks(n, k) if m & 1 and m != removed]
    block = [mask_of(c) for c in itertools.combinations(range(2, 2 * k + 1), k)]
    return SetFamily(n, k, tuple(members + block))


@dataclass(frozen=True)
class KneserParams:
    vertices: int
    degree: int
    lam: int


def kneser_params(m: int, a: int) -> KneserParams:
    if m < 2 * a or a < 1:
        raise ValueError("need m >= 2a >= 2")
    return KneserParams(binom(m, a), binom(m - a, a), binom(m - a - 1, a - 1))


def kneser_adjacency(m: int, a: int) -> np.ndarray:
    """Dense 0/1 adjacency of KG(m, a), vertices in lex order."""
    masks = np.array(list(_lex_masks(m, a)), dtype=np.uint64)
    return ((masks[:, None] & masks[None, :]) == 0).astype(np.int8)


def expander_mixing_gap(m: int, a: int, S: SetFamily, T: SetFamily) -> tuple[Fraction, float]:
    """(|e(S,T) - d|S||T|/N|, lambda * sqrt(|S||T|)) in KG(m, a).

    e(S, T) counts ordered pairs (u, v) in S x T with u, v disjoint, so an edge
    inside S & T is counted twice and e(S, S) / 2 is the internal edge count.
    """
    for fam in (S, T):
        if len(fam) and (fam.n != m or fam.k != a):
            raise ValueError("families must consist of a-subsets of [m]")
    p = kneser_params(m, a)
    e = cross_disj(S.members, T.members)
    gap = abs(Fraction(e) - Fraction(p.degree * len(S) * len(T), p.vertices))
    return gap, p.lam * math.sqrt(len(S) * len(T))


def cross_disj_lower(n: int, k: int, size_i: int, size_j: int) -> Fraction:
    """Lower bound on disjoint pairs between a family through i and one through j."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return (
        (1 - Fraction(k * k, n)) * size_i * size_j
        - Fraction(3 * k, 2 * n) * (size_i + size_j) * binom(n - 1, k - 1)
    )


def nearest_star_union(F: SetFamily, ell: int, cap: int = 2_000_000) -> tuple[tuple[int, ...], int]:
    """Centres of the union of ell stars closest to F in symmetric difference.

    Exhaustive over all ell-subsets of [n]; ties go to the lexicographically least.
    """
    n, k = F.n, F.k
    if ell < 0 or ell > n:
        raise ValueError("need 0 <= ell <= n")
    if ell > 3 and binom(n, ell) > cap:
        raise ValueError(f"C({n},{ell}) exceeds the search cap {cap}")
    total = binom(n, k)
    members = F.masks()
    best = None
    for centres in itertools.combinations(range(1, n + 1), ell):
        cm = np.uint64(mask_of(centres))
        union_size = total - binom(n - ell, k)
        inside = int(np.count_nonzero(members & cm)) if len(members) else 0
        dist = len(F) + union_size - 2 * inside
        if best is None or dist < best[1]:
            best = (centres, dist)
    return best


def star(n: int, k: int, centre: int) -> SetFamily:
    bit = 1 << (centre - 1)
    return _trusted(n, k, [m for m in _lex_masks(n, k) if m & bit])
