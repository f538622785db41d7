"""Exhaustive minimisers of disjoint pairs and the desk-scale reproductions.

A family of s sets (or permutations) with fewest disjoint pairs is a set of s
vertices spanning fewest edges in the Kneser (or derangement) graph. Both
graphs are vertex-transitive, so the search may insist on vertex 0; the number
of minimisers is then recovered as count0 * N / s.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from .exactcomb import binom, factorial
from .permfam import derangement_graph_bits, disj_T_formula
from .setfam import (
    _lex_masks, disj_lex_formula, disj_zeta, ell_ball, ball_radius,
    inner_ball, lex_segment, counterexample_family, elements_of, popcount,
)

MAX_WITNESSES = 100


@dataclass
class MinimizerReport:
    params: dict
    minimum: int
    num_minimizers: int
    sample_minimizers: list
    lex_or_T_value: int
    lex_or_T_optimal: bool
    exhaustive: bool = True
    runtime: float = 0.0
    nodes: int = 0
    extra: dict = field(default_factory=dict)


def kneser_bits(n: int, k: int) -> tuple[list[int], list[int]]:
    """(k-set masks in lex order, int-bitmask adjacency of the Kneser graph)."""
    masks = list(_lex_masks(n, k))
    N = len(masks)
    adj = [0] * N
    for i in range(N):
        for j in range(i + 1, N):
            if not masks[i] & masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return masks, adj


def independence_number(adj: Sequence[int]) -> int:
    """Size of a largest independent set (graphs on <= 64 vertices)."""
    N = len(adj)
    best = 0

    def go(cand, size):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + popcount(cand) <= best:
            return
        v = (cand & -cand).bit_length() - 1
        go(cand & ~(1 << v) & ~adj[v], size + 1)
        go(cand & ~(1 << v), size)

    go((1 << N) - 1, 0)
    return best


def _task(args):
    adj, s, prefix, start, best, deadline, alpha = args
    return kernels.min_edges_search(adj, s, prefix, start, best, True, MAX_WITNESSES, deadline, alpha)


def min_edges_transitive(adj: Sequence[int], s: int, incumbent: int, time_budget: float | None = None,
                         workers: int = 1, alpha: int | None = None) -> dict:
    """Fewest edges spanned by s vertices of a vertex-transitive graph.

    ``incumbent`` must be the value of some s-set (it seeds the pruning).
    Returns minimum, total minimiser count, witness vertex masks (all containing
    vertex 0), whether the search finished, and the node count.
    """
    N = len(adj)
    if not 0 <= s <= N:
        raise ValueError("s outside [0, N]")
    if s <= 1:
        return {"minimum": 0, "count": binom(N, s), "witnesses": [1 if s else 0], "complete": True, "nodes": 0}
    if alpha is None:
        alpha = independence_number(adj)
    deadline = time.monotonic() + time_budget if time_budget else None
    if workers > 1:
        # split below vertex 0 on the second vertex; the incumbent is shared up front
        tasks = [(list(adj), s, [0, v], v + 1, incumbent, deadline, alpha) for v in range(1, N - s + 2)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_task, tasks))
        best = min(r[0] for r in results)
        count0 = sum(r[1] for r in results if r[0] == best)
        wit = sorted((w for r in results if r[0] == best for w in r[2]), key=_mask_key)[:MAX_WITNESSES]
        complete = all(r[3] for r in results)
        nodes = sum(r[4] for r in results)
    else:
        best, count0, wit, complete, nodes = kernels.min_edges_search(
            adj, s, [0], 1, incumbent, True, MAX_WITNESSES, deadline, alpha)
    if count0 == 0:
        # nothing beat or matched the incumbent: impossible when the incumbent is attained
        raise AssertionError("incumbent was not attained by any s-set")
    total, rem = divmod(count0 * N, s)
    if rem and complete:
        raise AssertionError("minimiser count not consistent with vertex-transitivity")
    return {"minimum": best, "count": total, "witnesses": wit, "complete": complete, "nodes": nodes}


def _mask_key(m: int):
    return [i for i in range(m.bit_length()) if m >> i & 1]


def _relabel_table(n: int, k: int, masks: list[int]) -> np.ndarray:
    # img[p, idx] = index of the image of set idx under the p-th permutation of [n]
    index = {m: i for i, m in enumerate(masks)}
    rows = []
    for perm in itertools.permutations(range(n)):
        row = []
        for m in masks:
            x = 0
            for e in range(n):
                if m >> e & 1:
                    x |= 1 << perm[e]
            row.append(index[x])
        rows.append(row)
    return np.array(rows, dtype=np.int32)


def dedupe_set_witnesses(n: int, k: int, masks: list[int], witnesses: list[int]) -> list[tuple]:
    """Witness families up to relabelling [n], each as its lex-least image (n <= 8)."""
    if n > 8:
        return [tuple(masks[i] for i in _mask_key(w)) for w in witnesses]
    table = _relabel_table(n, k, masks)
    seen = {}
    for w in witnesses:
        idx = np.array(_mask_key(w), dtype=np.int32)
        images = np.sort(table[:, idx], axis=1)
        order = np.lexsort(images.T[::-1])
        canon = tuple(int(x) for x in images[order[0]])
        seen.setdefault(canon, None)
    return [tuple(masks[i] for i in c) for c in seen]


def min_disj_sets(n: int, k: int, s: int, time_budget: float | None = None,
                  workers: int = 1) -> MinimizerReport:
    """Fewest disjoint pairs over all s-subfamilies of the k-subsets of [n]."""
    t0 = time.perf_counter()
    masks, adj = kneser_bits(n, k)
    N = len(masks)
    if N > 64:
        raise ValueError(f"C({n},{k}) = {N} exceeds the 64-vertex search limit")
    if not 0 <= s <= N:
        raise ValueError(f"s = {s} outside [0, {N}]")
    lex = disj_lex_formula(n, k, s)
    res = min_edges_transitive(adj, s, lex, time_budget, workers)
    fams = dedupe_set_witnesses(n, k, masks, res["witnesses"]) if s > 0 else [()]
    return MinimizerReport(
        {"n": n, "k": k, "s": s}, res["minimum"], res["count"],
        [[elements_of(m) for m in fam] for fam in fams],
        lex, res["minimum"] == lex, res["complete"], time.perf_counter() - t0, res["nodes"],
    )


def min_disj_perms(n: int, s: int, time_budget: float | None = None, workers: int = 1) -> MinimizerReport:
    """Fewest disjoint pairs over all s-subfamilies of S_n (n <= 4)."""
    t0 = time.perf_counter()
    if n > 4:
        raise ValueError("exhaustive permutation search needs n <= 4")
    perms = list(itertools.permutations(range(1, n + 1)))
    adj = derangement_graph_bits(n)
    if not 0 <= s <= len(perms):
        raise ValueError(f"s = {s} outside [0, {n}!]")
    tval = disj_T_formula(n, s)
    res = min_edges_transitive(adj, s, tval, time_budget, workers, alpha=factorial(n - 1))
    wits = [[perms[i] for i in _mask_key(w)] for w in res["witnesses"]]
    return MinimizerReport(
        {"n": n, "s": s}, res["minimum"], res["count"], wits,
        tval, res["minimum"] == tval, res["complete"], time.perf_counter() - t0, res["nodes"],
    )


def katona_check(n: int, k: int, time_budget: float | None = None) -> MinimizerReport:
    """Minimum at size C(n-1,k-1) + 1, to compare with C(n-k-1, k-1)."""
    rep = min_disj_sets(n, k, binom(n - 1, k - 1) + 1, time_budget)
    rep.extra["expected"] = binom(n - k - 1, k - 1)
    return rep


@dataclass
class DualityReport:
    n: int
    k: int
    ok: bool
    identity_ok: bool
    min_by_size: list
    failures: list


def duality_check(n: int, k: int, cap: int = 24) -> DualityReport:
    """For every size, minimisers of e(S) at |S| = s are exactly complements of
    minimisers at N - s; also checks e(V-S) = e(G) - d|S| + e(S) for every S."""
    masks, adj = kneser_bits(n, k)
    N = len(masks)
    if N > cap:
        raise ValueError(f"2^{N} subsets exceed the enumeration cap 2^{cap}")
    e = kernels.subset_edge_counts(adj, N)
    full = (1 << N) - 1
    idx = np.arange(1 << N, dtype=np.int64)
    pop = np.zeros(1 << N, dtype=np.int64)
    for b in range(N):
        pop += (idx >> b) & 1
    d = binom(n - k, k)
    eG = int(e[full])
    comp = full ^ idx
    identity_ok = bool(np.all(e[comp] == eG - d * pop + e))
    mins = np.full(N + 1, np.iinfo(np.int64).max, dtype=np.int64)
    np.minimum.at(mins, pop, e)
    is_min = e == mins[pop]
    bad = np.nonzero(is_min != is_min[comp])[0]
    failures = [int(x) for x in bad[:10]]
    return DualityReport(n, k, identity_ok and not len(bad), identity_ok, [int(x) for x in mins], failures)


@dataclass
class CounterexampleRow:
    label: str
    ell: int | None
    radius: int | None
    disj: int
    inner_lower_bound: int | None = None


@dataclass
class CounterexampleTable:
    k: int
    n: int
    s: int
    disj_F: int
    disj_L: int
    gap: int
    gap_expected: int
    balls: list
    F_below_L: bool
    balls_above_L: bool


def verify_counterexample(k: int, zeta_cap: int = 28) -> CounterexampleTable:
    """disj of the counterexample family, the lex family, and ell-balls of the same size."""
    if not 2 <= k <= 8:
        raise ValueError("direct counting supports 2 <= k <= 8")
    n = 3 * k - 1
    F = counterexample_family(k)
    s = len(F)
    dF = disj_zeta(F, zeta_cap)
    dL = disj_zeta(lex_segment(n, k, s), zeta_cap)
    formula_L = (binom(2 * k - 1, k) - 1) * binom(2 * k - 2, k - 1)
    if dL != formula_L or dL != disj_lex_formula(n, k, s):
        raise AssertionError("lex count disagrees with its closed forms")
    gap_expected = (binom(2 * k - 1, k) - 1) - (binom(2 * k - 2, k - 1) - 1)
    balls = []
    for ell in range(2, k + 1):
        r = ball_radius(n, k, ell, s)
        B = ell_ball(n, k, ell, s, r)
        inner = disj_zeta(inner_ball(n, k, ell, r), zeta_cap) if r else 0
        balls.append(CounterexampleRow(f"B_{ell}", ell, r, disj_zeta(B, zeta_cap), inner))
    return CounterexampleTable(
        k, n, s, dF, dL, dL - dF, gap_expected, balls,
        dF < dL, all(b.disj > dL for b in balls),
    )


def closed_form_counterexample(k: int) -> dict:
    """Closed-form values for larger k (no counting)."""
    n = 3 * k - 1
    s = binom(n - 1, k - 1) + binom(2 * k - 1, k) - 1
    dL = (binom(2 * k - 1, k) - 1) * binom(2 * k - 2, k - 1)
    gap = (binom(2 * k - 1, k) - 1) - (binom(2 * k - 2, k - 1) - 1)
    return {"k": k, "n": n, "s": s, "disj_L": dL, "disj_F": dL - gap, "gap": gap}
