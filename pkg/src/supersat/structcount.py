"""Matchings, shadows, maximal matching-free families and their counts."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import kernels
from .exactcomb import binom, gen_binom, lovasz_root
from .setfam import SetFamily, _lex_masks, elements_of, mask_of, popcount

DEFAULT_FULL_CAP = 24
DEFAULT_KNESER_CAP = 64


def shadow(F: SetFamily, s: int) -> SetFamily:
    """All s-subsets of members of F."""
    if not 1 <= s <= F.k:
        raise ValueError("need 1 <= s <= k")
    out = set()
    for m in F.members:
        for c in itertools.combinations(elements_of(m), s):
            out.add(mask_of(c))
    return SetFamily(F.n, s, tuple(out))


def kk_lower_bound(t: int, r: int, s: int) -> float:
    """C(x, s) where C(x, r) = t; the shadow-size floor for t sets of size r."""
    if not 1 <= s <= r or t < 1:
        raise ValueError("need 1 <= s <= r and t >= 1")
    x = lovasz_root(t, r)
    if isinstance(x, Fraction):
        return gen_binom(x, s)
    # float root: evaluate in floats, accuracy is that of the root
    val = 1.0
    for i in range(s):
        val *= (x - i) / (i + 1)
    return val


def hilton_milner_bound(n: int, k: int) -> int:
    if k < 2 or n < 2 * k + 1:
        raise ValueError("need k >= 2 and n >= 2k + 1")
    return binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1


def _has_matching(masks: Sequence[int], t: int) -> bool:
    if t <= 0:
        return True
    if len(masks) < t:
        return False
    for i in range(len(masks) - t + 1):
        x = masks[i]
        if _has_matching([y for y in masks[i + 1:] if not y & x], t - 1):
            return True
    return False


def has_matching(F: Iterable[int], s: int) -> bool:
    """Whether the masks contain s pairwise disjoint members."""
    return _has_matching(list(F), s)


def max_matching_size(F: SetFamily | Sequence[int]) -> int:
    masks = list(F.members if isinstance(F, SetFamily) else F)
    best = 0

    def go(rest, size):
        nonlocal best
        if size > best:
            best = size
        if size + len(rest) <= best:
            return
        for i, x in enumerate(rest):
            if size + len(rest) - i <= best:
                return
            go([y for y in rest[i + 1:] if not y & x], size + 1)

    go(masks, 0)
    return best


def kneser_neighbours(masks: Sequence[int]) -> list[int]:
    """Adjacency of the disjointness graph as int bitmasks over member indices."""
    N = len(masks)
    adj = [0] * N
    for i in range(N):
        for j in range(i + 1, N):
            if not masks[i] & masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def count_independent_sets(adj: Sequence[int]) -> int:
    """Independent sets of a graph given as int-bitmask adjacency (any size)."""
    adj = list(adj)

    @lru_cache(maxsize=None)
    def count(S: int) -> int:
        if not S:
            return 1
        # split into connected components
        low = S & -S
        comp, frontier = low, low
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & S & ~comp
            comp |= new
            frontier |= new
        if comp != S:
            return count(comp) * count(S & ~comp)
        # branch on a vertex of maximum degree inside S
        best_v, best_d = -1, -1
        T = S
        while T:
            v = (T & -T).bit_length() - 1
            T &= T - 1
            d = popcount(adj[v] & S)
            if d > best_d:
                best_v, best_d = v, d
        if best_d == 0:
            return 1 << popcount(S)
        v = best_v
        return count(S & ~(1 << v)) + count(S & ~(1 << v) & ~adj[v])

    return count((1 << len(adj)) - 1)


def count_no_matching_families(n: int, k: int, s: int, cap: int = DEFAULT_FULL_CAP,
                               kneser_cap: int = DEFAULT_KNESER_CAP) -> int:
    """Subfamilies of the k-level of [n] with no s pairwise disjoint members."""
    if s < 1 or not 1 <= k <= n:
        raise ValueError("need s >= 1 and 1 <= k <= n")
    size = binom(n, k)
    masks = list(_lex_masks(n, k))
    if s == 1:
        return 1
    if s == 2:
        if size > kneser_cap:
            raise ValueError(f"C({n},{k}) = {size} exceeds the cap {kneser_cap}")
        return count_independent_sets(kneser_neighbours(masks))
    if size > cap:
        raise ValueError(f"C({n},{k}) = {size} exceeds the enumeration cap {cap}")
    return kernels.count_matching_free(masks, s)


def closure_I(G: SetFamily | Sequence[int], s: int, n: int | None = None, k: int | None = None) -> SetFamily:
    """Every k-set whose addition to G creates no s pairwise disjoint members."""
    if isinstance(G, SetFamily):
        n, k, members = G.n, G.k, list(G.members)
    else:
        members = list(G)
        if n is None or k is None:
            raise ValueError("n and k are needed for a bare mask list")
    if _has_matching(members, s):
        return SetFamily(n, k, ())
    out = [X for X in _lex_masks(n, k) if not _has_matching([g for g in members if not g & X], s - 1)]
    return SetFamily(n, k, tuple(out))


def is_maximal(F: SetFamily, s: int) -> bool:
    return closure_I(F, s).members == F.members


def minimal_generating(Fmax: SetFamily, s: int) -> SetFamily:
    """Greedy inclusion-minimal G0 with closure_I(G0) == Fmax.

    One lex-order pass suffices: closure only grows as members are dropped, so
    a member that could not be dropped earlier can never be dropped later.
    """
    if not is_maximal(Fmax, s):
        raise ValueError("family is not maximal")
    target = Fmax.members
    keep = list(Fmax.members)
    for m in Fmax.members:
        trial = [x for x in keep if x != m]
        if closure_I(trial, s, Fmax.n, Fmax.k).members == target:
            keep = trial
    return SetFamily(Fmax.n, Fmax.k, tuple(keep))


def _maximal_cliques(adj: Sequence[int]):
    """Bron-Kerbosch with pivoting over int-bitmask adjacency."""
    out = []

    def bk(R, P, X):
        if not P and not X:
            out.append(R)
            return
        PX = P | X
        u, best = -1, -1
        while PX:
            v = (PX & -PX).bit_length() - 1
            PX &= PX - 1
            d = popcount(P & adj[v])
            if d > best:
                u, best = v, d
        cand = P & ~adj[u]
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            bk(R | (1 << v), P & adj[v], X & adj[v])
            P &= ~(1 << v)
            X |= 1 << v

    bk(0, (1 << len(adj)) - 1, 0)
    return out


def enumerate_maximal_families(n: int, k: int, s: int, cap: int = DEFAULT_FULL_CAP,
                               kneser_cap: int = DEFAULT_KNESER_CAP) -> list[SetFamily]:
    """All maximal families with no s pairwise disjoint members, sorted by member lists."""
    if s < 2 or not 1 <= k <= n:
        raise ValueError("need s >= 2 and 1 <= k <= n")
    masks = list(_lex_masks(n, k))
    N = len(masks)
    fams = []
    if s == 2:
        if N > kneser_cap:
            raise ValueError(f"C({n},{k}) = {N} exceeds the cap {kneser_cap}")
        # maximal independent sets of the Kneser graph = maximal cliques of its complement
        full = (1 << N) - 1
        comp = [full & ~a & ~(1 << i) for i, a in enumerate(kneser_neighbours(masks))]
        for R in _maximal_cliques(comp):
            fams.append(SetFamily(n, k, tuple(masks[i] for i in range(N) if R >> i & 1)))
    else:
        if N > cap:
            raise ValueError(f"C({n},{k}) = {N} exceeds the enumeration cap {cap}")

        def rec(idx, chosen):
            if idx == N:
                fam = SetFamily(n, k, tuple(chosen))
                if is_maximal(fam, s):
                    fams.append(fam)
                return
            v = masks[idx]
            if not _has_matching([c for c in chosen if not c & v], s - 1):
                chosen.append(v)
                rec(idx + 1, chosen)
                chosen.pop()
            rec(idx + 1, chosen)

        rec(0, [])
    fams.sort(key=lambda f: [elements_of(m) for m in f.members])
    return fams


@dataclass(frozen=True)
class SetPairSystem:
    pairs: tuple[tuple[frozenset, frozenset], ...]

    def __post_init__(self):
        if self.pairs:
            a = {len(A) for A, _ in self.pairs}
            b = {len(B) for _, B in self.pairs}
            if len(a) > 1 or len(b) > 1:
                raise ValueError("set pairs must have uniform sizes")
        for A, B in self.pairs:
            if A & B:
                raise ValueError("each A_i must be disjoint from its B_i")

    @classmethod
    def of(cls, pairs) -> "SetPairSystem":
        return cls(tuple((frozenset(A), frozenset(B)) for A, B in pairs))


def bollobas_check(P: SetPairSystem) -> tuple[bool, int, int]:
    """(cross condition holds, m, C(a+b, a)). Raises if a valid system beats the bound."""
    m = len(P.pairs)
    if m == 0:
        return True, 0, 1
    a, b = len(P.pairs[0][0]), len(P.pairs[0][1])
    valid = all(
        P.pairs[i][0] & P.pairs[j][1]
        for i in range(m) for j in range(m) if i != j
    )
    bound = binom(a + b, a)
    if valid and m > bound:
        raise AssertionError(f"set-pair system of size {m} exceeds C({a + b},{a}) = {bound}")
    return valid, m, bound


def generator_set_pairs(G0: SetFamily, s: int) -> SetPairSystem:
    """Pairs (F_i, G_i) witnessing minimality of a generating family.

    For each F_i pick the lex-least G in closure(G0 - F_i) outside closure(G0),
    then s-2 members of G0 that with F_i and G form a matching; G_i is the
    union of those s-1 sets.
    """
    n, k = G0.n, G0.k
    members = list(G0.members)
    full = closure_I(members, s, n, k).members
    full_set = set(full)
    pairs = []
    for i, Fi in enumerate(members):
        rest = members[:i] + members[i + 1:]
        extra = [X for X in closure_I(rest, s, n, k).members if X not in full_set]
        if not extra:
            raise ValueError("generating family is not minimal")
        G_last = extra[0]
        pool = [g for g in rest if not g & Fi and not g & G_last]
        match = _find_matching(pool, s - 2)
        if match is None:
            raise AssertionError("no matching completes the witness")
        Gi = G_last
        for g in match:
            Gi |= g
        pairs.append((elements_of(Fi), elements_of(Gi)))
    return SetPairSystem.of(pairs)


def _find_matching(masks, t):
    if t == 0:
        return []
    for i, x in enumerate(masks):
        sub = _find_matching([y for y in masks[i + 1:] if not y & x], t - 1)
        if sub is not None:
            return [x] + sub
    return None


@dataclass(frozen=True)
class TypicalityReport:
    n: int
    k: int
    s: int
    N0: int
    N2: int
    N1_bound: Fraction
    log2M_bound: int
    margin: Fraction
    T: int
    target: Fraction | None = None
    target_applies: bool = False
    meets_target: bool | None = None
    extra: dict = field(default_factory=dict)


def typicality_report(n: int, k: int, s: int) -> TypicalityReport:
    """Exact margin 2 log2 M + max(N1, N2) - N0 with log2 M replaced by n C(sk, k)."""
    if s < 2 or k < 1:
        raise ValueError("need s >= 2 and k >= 1")
    if n < (2 * s - 1) * k - s + 1:
        raise ValueError(f"need n >= (2s-1)k - s + 1 = {(2 * s - 1) * k - s + 1}")
    N0 = binom(n, k) - binom(n - s + 1, k)
    N2 = N0 - binom(n - s, k - 1)
    N1 = N0 - Fraction(binom(n - k - s + 1, k - 1), s + 1)
    logM = n * binom(s * k, k)
    margin = 2 * logM + max(N1, Fraction(N2)) - N0
    applies = n >= 2 * s * k + 38 * s ** 4
    target = -Fraction(n * binom(s * k, k), 18)
    return TypicalityReport(
        n, k, s, N0, N2, N1, logM, margin, binom(n, s - 1),
        target=target, target_applies=applies,
        meets_target=(margin <= target) if applies else None,
    )


def best_star(F: SetFamily) -> int:
    """Centre of the star closest to F in symmetric difference (least on ties)."""
    best = None
    size = binom(F.n - 1, F.k - 1)
    for c in range(1, F.n + 1):
        bit = 1 << (c - 1)
        inside = sum(1 for m in F.members if m & bit)
        dist = len(F) + size - 2 * inside
        if best is None or dist < best[1]:
            best = (c, dist)
    return best[0]


def _swap_bits(m: int, a: int, b: int) -> int:
    # exchange elements a and b (1-based)
    ba, bb = (m >> (a - 1)) & 1, (m >> (b - 1)) & 1
    if ba != bb:
        m ^= (1 << (a - 1)) | (1 << (b - 1))
    return m


def pq_shadow_check(F: SetFamily) -> bool:
    """Whether the (k-1)-shadow of P equals Q after moving the best star centre to n."""
    n, k = F.n, F.k
    if not is_maximal(F, 2):
        raise ValueError("family is not maximal intersecting")
    c = best_star(F)
    members = {_swap_bits(m, c, n) for m in F.members}
    top = 1 << (n - 1)
    base = top - 1  # [n-1]
    A = [m for m in members if not m & top]
    B = [m for m in _lex_masks(n, k) if m & top and m not in members]
    P = [base & ~a for a in A]
    Q = {b & ~top for b in B}
    shade = set()
    for p in P:
        els = [i for i in range(n - 1) if p >> i & 1]
        for combo in itertools.combinations(els, k - 1):
            x = 0
            for i in combo:
                x |= 1 << i
            shade.add(x)
    return shade == Q


def maximal_intersecting_families(n: int, k: int) -> list[SetFamily]:
    return enumerate_maximal_families(n, k, 2)
