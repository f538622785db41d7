"""Intersection graphs of coset unions.

Points (i, j) and (i', j') are adjacent exactly when i != i' and j != j', so a
configuration of points is a small grid graph. This module computes clique
counts and induced edge-plus-vertex counts, decides canonicity, evaluates the
interval estimates for unions of cosets, and sweeps grid classes up to
row/column permutation and transpose.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .exactcomb import binom, derangement_count, factorial
from .permfam import CosetSpec, inverse

MAX_GRID_K1 = 6


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval with lo > hi")

    @classmethod
    def around(cls, centre, err) -> "Interval":
        centre, err = Fraction(centre), Fraction(err)
        return cls(centre - abs(err), centre + abs(err))

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    @property
    def centre(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def half_width(self) -> Fraction:
        return (self.hi - self.lo) / 2


@dataclass
class IntGraph:
    points: tuple
    adj: tuple  # int bitmasks over point indices
    _cliques: dict = field(default_factory=dict, repr=False)
    _p3bar: int | None = field(default=None, repr=False)

    @property
    def k1(self) -> int:
        return len(self.points)

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.k1) for b in range(a + 1, self.k1) if self.adj[a] >> b & 1]

    def k(self, t: int) -> int:
        return clique_counts(self, t)[t - 1] if t >= 1 else 1


def build_intgraph(spec: CosetSpec | Sequence) -> IntGraph:
    pts = tuple(spec.points if isinstance(spec, CosetSpec) else (tuple(p) for p in spec))
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points")
    adj = []
    for a, (i, j) in enumerate(pts):
        m = 0
        for b, (i2, j2) in enumerate(pts):
            if i != i2 and j != j2:
                m |= 1 << b
        adj.append(m)
    return IntGraph(pts, tuple(adj))


def clique_counts(G: IntGraph, t_max: int = 4) -> list[int]:
    """[k_1, ..., k_{t_max}] by extending cliques through higher-indexed neighbours."""
    if t_max in G._cliques:
        return G._cliques[t_max]
    counts = [0] * t_max

    def extend(size, cand):
        counts[size - 1] += 1
        if size == t_max:
            return
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            extend(size + 1, cand & G.adj[v])

    for v in range(G.k1):
        higher = G.adj[v] & ~((1 << (v + 1)) - 1)
        extend(1, higher)
    G._cliques[t_max] = counts
    return counts


def p3bar_count(G: IntGraph) -> int:
    """Triples (x, {y, z}) where yz is the only edge among x, y, z."""
    if G._p3bar is None:
        idx = {p: a for a, p in enumerate(G.points)}
        total = 0
        for a, b in G.edges():
            (y1, y2), (z1, z2) = G.points[a], G.points[b]
            total += ((y1, z2) in idx) + ((z1, y2) in idx)
        G._p3bar = total
    return G._p3bar


def p3bar_scan(G: IntGraph) -> int:
    """Direct triple scan, the reference for p3bar_count."""
    total = 0
    for x in range(G.k1):
        for y, z in itertools.combinations(range(G.k1), 2):
            if x in (y, z):
                continue
            e_yz = G.adj[y] >> z & 1
            if e_yz and not G.adj[x] >> y & 1 and not G.adj[x] >> z & 1:
                total += 1
    return total


def is_canonical(G: IntGraph) -> bool:
    """Some row or column holds at least k_1 - 1 of the points."""
    if G.k1 <= 2:
        return True
    rows, cols = {}, {}
    for i, j in G.points:
        rows[i] = rows.get(i, 0) + 1
        cols[j] = cols.get(j, 0) + 1
    return max(max(rows.values()), max(cols.values())) >= G.k1 - 1


def edge_overlap(G: IntGraph, pi) -> int:
    """sum over edges xy of |{x1, y1} & {pi^-1(x2), pi^-1(y2)}|."""
    inv = inverse(pi)
    total = 0
    for a, b in G.edges():
        (x1, x2), (y1, y2) = G.points[a], G.points[b]
        total += len({x1, y1} & {inv[x2 - 1], inv[y2 - 1]})
    return total


@dataclass(frozen=True)
class Prop25Intervals:
    a: Interval
    b: Interval
    c: Interval
    b_refined: Callable[[int], Interval]
    c_refined: Interval


def prop25_intervals(G: IntGraph, n: int) -> Prop25Intervals:
    """Union size (a), disj to an outside permutation (b), disj within the union (c),
    and the refined forms of (b) and (c)."""
    if n < 5:
        raise ValueError("need n >= 5")
    k1, k2, k3, k4 = clique_counts(G, 4)
    f = factorial
    d = derangement_count
    D1 = d(n - 1) + d(n - 2)
    D2 = d(n - 2) + d(n - 3)
    Dp2 = d(n - 2) + 2 * d(n - 3)
    p3 = p3bar_count(G)

    a = Interval.around(k1 * f(n - 1) - k2 * f(n - 2) + k3 * f(n - 3), k4 * f(n - 4))
    b = Interval.around(k1 * D1 - k2 * D2, 3 * k1 * k2 * f(n - 3))
    c = Interval.around(
        binom(k1, 2) * f(n - 1) * D1 - (k1 - 1) * k2 * f(n - 2) * D1,
        2 * k1 * k1 * k2 * f(n - 1) * f(n - 3),
    )

    def b_refined(overlap: int) -> Interval:
        return Interval.around(
            k1 * D1 - k2 * Dp2 + (k3 + overlap) * d(n - 3),
            (28 * k2 + 4 * k3 + k4) * f(n - 4),
        )

    a3 = Fraction((2 * k1 - 3) * k3 + (k2 - k1 + 1) * k2 + p3, 2)
    c_ref = Interval.around(
        (binom(k1, 2) * f(n - 1) - (k1 - 1) * k2 * f(n - 2) + a3 * f(n - 3)) * D1,
        12 * k1 ** 3 * k2 * f(n - 1) * f(n - 4),
    )
    return Prop25Intervals(a, b, c, b_refined, c_ref)


# -- exceptional graphs ---------------------------------------------------------

def _edge_set(num, edges):
    return num, frozenset(frozenset(e) for e in edges)


EXCEPTIONAL = {
    "2K2": _edge_set(4, [(0, 1), (2, 3)]),
    "P4": _edge_set(4, [(0, 1), (1, 2), (2, 3)]),
    "P5": _edge_set(5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
    "C4+K1": _edge_set(5, [(0, 1), (1, 2), (2, 3), (3, 0)]),
}


def isomorphic_to(G: IntGraph, name: str) -> bool:
    num, target = EXCEPTIONAL[name]
    if G.k1 != num:
        return False
    edges = [frozenset(e) for e in G.edges()]
    if len(edges) != len(target):
        return False
    for perm in itertools.permutations(range(num)):
        if all(frozenset(perm[v] for v in e) in target for e in edges):
            return True
    return False


def exceptional_name(G: IntGraph) -> str | None:
    for name in EXCEPTIONAL:
        if isomorphic_to(G, name):
            return name
    return None


HOLDS, EXEMPT, NOT_APPLICABLE, VIOLATED = "holds", "exempt", "not-applicable", "VIOLATED"


@dataclass(frozen=True)
class A5Status:
    I: str
    II: str
    III: str
    III_12: str
    lhs_III: int


def claim_a5_check(G: IntGraph) -> A5Status:
    """Statuses of the three intersection-graph inequalities.

    I: k2 >= max(k1, 2k1 - 6), exempt for canonical graphs and 2K2, P4, P5, C4+K1.
    II: k2 (k2 - k1 + 1) >= 2 k3 + 1 whenever k2 >= k1.
    III: k2 (k2 - k1 + 1) + p3bar - k3 >= k1 k2 / 50 for non-canonical graphs;
    III_12 is the same with 1/12.
    """
    k1, k2, k3 = clique_counts(G, 3)
    canon = is_canonical(G)
    if k2 >= max(k1, 2 * k1 - 6):
        s1 = HOLDS
    elif canon or exceptional_name(G):
        s1 = EXEMPT
    else:
        s1 = VIOLATED
    if k2 < k1:
        s2 = NOT_APPLICABLE
    else:
        s2 = HOLDS if k2 * (k2 - k1 + 1) >= 2 * k3 + 1 else VIOLATED
    lhs = k2 * (k2 - k1 + 1) + p3bar_count(G) - k3
    if canon:
        s3 = s3b = NOT_APPLICABLE
    else:
        s3 = HOLDS if lhs >= Fraction(k1 * k2, 50) else VIOLATED
        s3b = HOLDS if lhs >= Fraction(k1 * k2, 12) else VIOLATED
    return A5Status(s1, s2, s3, s3b, lhs)


# -- grid classes -------------------------------------------------------------

def _compress(points):
    rows = sorted({i for i, _ in points})
    cols = sorted({j for _, j in points})
    ri = {r: a for a, r in enumerate(rows)}
    ci = {c: a for a, c in enumerate(cols)}
    return len(rows), len(cols), [(ri[i], ci[j]) for i, j in points]


def _lex_min_rows(r, c, pts):
    """Lex-least sorted point tuple over row and column orders (one orientation).

    Rows are placed one at a time. Columns that agree on the rows placed so far
    are interchangeable, so each placed row's entries are final; a row choice
    giving a fewer-or-larger entry tuple can be discarded.
    """
    row_sets = [frozenset(j for i, j in pts if i == a) for a in range(r)]
    best = None

    def entries(order):
        # rank columns by their vectors over the placed rows, 1 before 0
        key = {j: tuple(0 if j in row_sets[a] else 1 for a in order) for j in range(c)}
        # tied columns agree on every placed row, so any order among them will do
        ranked = sorted(range(c), key=lambda j: key[j])
        return {j: idx for idx, j in enumerate(ranked)}

    def go(order, remaining, prefix):
        nonlocal best
        if not remaining:
            cand = tuple(prefix)
            if best is None or cand < best:
                best = cand
            return
        options = []
        for a in remaining:
            pos = entries(order + [a])
            row = tuple(sorted(pos[j] + 1 for j in row_sets[a]))
            options.append((row + (1 << 30,), a))
        m = min(o[0] for o in options)
        for key, a in options:
            if key == m:
                pos = entries(order + [a])
                placed = [(s + 1, pos[j] + 1) for s, b in enumerate(order + [a]) for j in row_sets[b]]
                go(order + [a], [x for x in remaining if x != a], sorted(placed))

    go([], list(range(r)), [])
    return best


def canonical_form(points) -> tuple:
    """Lexicographically least representative under row perms, column perms and transpose."""
    pts = [tuple(p) for p in points]
    if not pts:
        return ()
    r, c, comp = _compress(pts)
    one = _lex_min_rows(r, c, comp)
    two = _lex_min_rows(c, r, [(j, i) for i, j in comp])
    return min(one, two)


def canonical_form_brute(points) -> tuple:
    """Reference canonical form by trying every row order, column order and transpose."""
    pts = [tuple(p) for p in points]
    r, c, comp = _compress(pts)
    best = None
    for flip in (False, True):
        cur = [(j, i) for i, j in comp] if flip else comp
        rr, cc = (c, r) if flip else (r, c)
        for rp in itertools.permutations(range(rr)):
            for cp in itertools.permutations(range(cc)):
                cand = tuple(sorted((rp[i] + 1, cp[j] + 1) for i, j in cur))
                if best is None or cand < best:
                    best = cand
    return best


def enumerate_grid_graphs(k1_max: int, cap: int = MAX_GRID_K1) -> Iterator[tuple]:
    """Canonical point sets of every size 1..k1_max, by size then lex order."""
    if k1_max > cap:
        raise ValueError(f"k1_max = {k1_max} exceeds the cap {cap}")
    if k1_max < 1:
        return
    level = {((1, 1),)}
    for m in range(1, k1_max + 1):
        yield from sorted(level)
        if m == k1_max:
            break
        nxt = set()
        for form in level:
            present = set(form)
            r = max(i for i, _ in form)
            c = max(j for _, j in form)
            for i in range(1, r + 2):
                for j in range(1, c + 2):
                    if (i, j) not in present:
                        nxt.add(canonical_form(form + ((i, j),)))
        level = nxt


def spec_for(points, n: int) -> CosetSpec:
    """Embed a grid configuration into [n]^2 (it must fit)."""
    return CosetSpec(n, tuple(points))


def grid_row(points, G: IntGraph | None = None) -> dict:
    """One CSV row of statistics for a configuration."""
    G = G or build_intgraph(points)
    k = clique_counts(G, 4)
    st = claim_a5_check(G)
    return {
        "form": " ".join(f"{i}:{j}" for i, j in points),
        "k1": k[0], "k2": k[1], "k3": k[2], "k4": k[3],
        "p3bar": p3bar_count(G),
        "canonical": is_canonical(G),
        "I": st.I, "II": st.II, "III": st.III, "III_1_12": st.III_12,
    }
