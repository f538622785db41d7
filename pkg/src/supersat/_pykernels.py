"""Pure-Python (numpy-assisted) versions of the compiled kernels.

Every function has the same signature and result as its twin in
``_ckernels.pyx``; the test-suite runs both against each other.
"""
from __future__ import annotations

import time

import numpy as np


def count_disjoint_pairs(masks) -> int:
    a = np.asarray(masks, dtype=np.uint64)
    total = 0
    for i in range(len(a) - 1):
        total += int(np.count_nonzero((a[i + 1:] & a[i]) == 0))
    return total


def count_cross_disjoint(masks_a, masks_b) -> int:
    a = np.asarray(masks_a, dtype=np.uint64)
    b = np.asarray(masks_b, dtype=np.uint64)
    if len(a) == 0 or len(b) == 0:
        return 0
    return sum(int(np.count_nonzero((b & x) == 0)) for x in a)


def zeta_disjoint_pairs(masks, n: int) -> int:
    a = np.asarray(masks, dtype=np.int64)
    size = 1 << n
    g = np.zeros(size, dtype=np.uint32)
    np.add.at(g, a, 1)
    for i in range(n):
        view = g.reshape(-1, 2, 1 << i)
        view[:, 1, :] += view[:, 0, :]
    return int(g[(size - 1) ^ a].sum(dtype=np.int64)) // 2


def subset_edge_counts(adj, N: int) -> np.ndarray:
    out = np.zeros(1, dtype=np.int64)
    for v in range(N):
        # subsets of {0..v}: those without v, then those with v
        low = np.arange(1 << v, dtype=np.uint64)
        nbr = np.uint64(adj[v] & ((1 << v) - 1))
        extra = _popcount64(low & nbr)
        out = np.concatenate([out, out + extra])
    return out


def _popcount64(x: np.ndarray) -> np.ndarray:
    x = x.astype(np.uint64)
    count = np.zeros(x.shape, dtype=np.int64)
    while np.any(x):
        count += (x & np.uint64(1)).astype(np.int64)
        x = x >> np.uint64(1)
    return count


def _turan_floor(r: int, alpha: int) -> int:
    if alpha <= 0 or r <= alpha:
        return 0
    q, t = divmod(r, alpha)
    return t * (q + 1) * q // 2 + (alpha - t) * q * (q - 1) // 2


def min_edges_search(adj, s, prefix, start, best, count_ties=True,
                     max_witnesses=100, deadline=None, alpha=0):
    """Branch-and-bound minimum of e(S) over s-subsets S of a graph on <= 64 vertices.

    S must contain every vertex of ``prefix``; all other members are >= ``start``.
    Subtrees whose lower bound exceeds ``best`` are cut, so the result is
    ``min(best, true minimum)``. Returns ``(value, count, witnesses, complete, nodes)``
    where ``count`` counts subsets attaining ``value`` (exact only when
    ``count_ties``; zero if nothing reached ``best``) and ``complete`` is false
    when ``deadline`` (a ``time.monotonic`` value) expired first.
    """
    N = len(adj)
    cost = [0] * N
    chosen = 0
    e = 0
    for v in prefix:
        e += cost[v]
        chosen |= 1 << v
        for u in _bits(adj[v]):
            cost[u] += 1
    nbrs = [list(_bits(a)) for a in adj]
    state = {"best": best, "count": 0, "have": False, "wit": [], "nodes": 0, "timeout": False}

    def prune(value):
        if value > state["best"]:
            return True
        return value == state["best"] and state["have"] and not count_ties

    def dfs(depth, chosen, e, start):
        state["nodes"] += 1
        if deadline is not None and (state["nodes"] & 0x3FF) == 0 and time.monotonic() > deadline:
            state["timeout"] = True
        if state["timeout"]:
            return
        r = s - depth
        if r == 0:
            if e < state["best"]:
                state["best"] = e
                state["count"] = 0
                state["wit"] = []
            state["count"] += 1
            state["have"] = True
            if len(state["wit"]) < max_witnesses:
                state["wit"].append(chosen)
            return
        if N - start < r:
            return
        lb = sum(sorted(cost[start:])[:r]) + _turan_floor(r, alpha)
        if prune(e + lb):
            return
        for v in range(start, N - r + 1):
            ec = e + cost[v]
            if prune(ec + _turan_floor(r, alpha)):
                continue
            for u in nbrs[v]:
                cost[u] += 1
            dfs(depth + 1, chosen | (1 << v), ec, v + 1)
            for u in nbrs[v]:
                cost[u] -= 1
            if state["timeout"]:
                return

    dfs(len(prefix), chosen, e, start)
    return state["best"], state["count"], state["wit"], not state["timeout"], state["nodes"]


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _has_matching(sets, t):
    if t <= 0:
        return True
    if len(sets) < t:
        return False
    for i in range(len(sets) - t + 1):
        x = sets[i]
        rest = [y for y in sets[i + 1:] if not y & x]
        if _has_matching(rest, t - 1):
            return True
    return False


def count_matching_free(masks, s):
    """Number of subfamilies of ``masks`` with no s pairwise disjoint members."""
    if s < 1:
        raise ValueError("s must be positive")
    masks = list(masks)
    N = len(masks)

    def rec(idx, chosen):
        if idx == N:
            return 1
        total = rec(idx + 1, chosen)
        v = masks[idx]
        if not _has_matching([c for c in chosen if not c & v], s - 1):
            chosen.append(v)
            total += rec(idx + 1, chosen)
            chosen.pop()
        return total

    return rec(0, [])
