# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot loops. Signatures mirror ``supersat._pykernels``."""
from libc.stdint cimport uint64_t, int64_t, uint32_t
from libc.stdlib cimport malloc, free
from posix.time cimport clock_gettime, timespec, CLOCK_MONOTONIC

import numpy as np

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline double _now() noexcept nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return ts.tv_sec + ts.tv_nsec * 1e-9


def count_disjoint_pairs(masks):
    cdef uint64_t[::1] a = np.ascontiguousarray(np.asarray(masks, dtype=np.uint64))
    cdef Py_ssize_t m = a.shape[0], i, j
    cdef uint64_t x
    cdef int64_t total = 0
    with nogil:
        for i in range(m):
            x = a[i]
            for j in range(i + 1, m):
                if (x & a[j]) == 0:
                    total += 1
    return int(total)


def count_cross_disjoint(masks_a, masks_b):
    cdef uint64_t[::1] a = np.ascontiguousarray(np.asarray(masks_a, dtype=np.uint64))
    cdef uint64_t[::1] b = np.ascontiguousarray(np.asarray(masks_b, dtype=np.uint64))
    cdef Py_ssize_t i, j
    cdef uint64_t x
    cdef int64_t total = 0
    with nogil:
        for i in range(a.shape[0]):
            x = a[i]
            for j in range(b.shape[0]):
                if (x & b[j]) == 0:
                    total += 1
    return int(total)


def zeta_disjoint_pairs(masks, int n):
    cdef uint64_t[::1] a = np.ascontiguousarray(np.asarray(masks, dtype=np.uint64))
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef uint64_t full = (<uint64_t>size) - 1
    g_arr = np.zeros(size, dtype=np.uint32)
    cdef uint32_t[::1] g = g_arr
    cdef Py_ssize_t i, m, bit, hi, lo, base
    cdef int64_t total = 0
    with nogil:
        for i in range(a.shape[0]):
            g[a[i]] += 1
        for i in range(n):
            bit = (<Py_ssize_t>1) << i
            base = 0
            while base < size:
                for lo in range(bit):
                    g[base + bit + lo] += g[base + lo]
                base += 2 * bit
        for i in range(a.shape[0]):
            total += g[full ^ a[i]]
    return int(total // 2)


def subset_edge_counts(adj, int N):
    cdef uint64_t[::1] ad = np.ascontiguousarray(np.asarray(adj, dtype=np.uint64))
    cdef Py_ssize_t size = (<Py_ssize_t>1) << N
    out_arr = np.zeros(size, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    cdef Py_ssize_t S
    cdef int v
    with nogil:
        for S in range(1, size):
            v = __builtin_ctzll(<uint64_t>S)
            out[S] = out[S & (S - 1)] + __builtin_popcountll(ad[v] & <uint64_t>(S & (S - 1)))
    return out_arr


cdef struct Search:
    int N
    int s
    uint64_t adj[64]
    int cost[64]
    int alpha
    int64_t best
    uint64_t count
    bint count_ties
    bint have_witness
    int max_wit
    int nwit
    uint64_t *wit
    uint64_t nodes
    double deadline
    bint timed_out


cdef inline int64_t _turan_floor(int r, int alpha) noexcept nogil:
    # fewest edges on r vertices with independence number <= alpha
    cdef int q, t
    if alpha <= 0 or r <= alpha:
        return 0
    q = r // alpha
    t = r % alpha
    return <int64_t>t * (q + 1) * q // 2 + <int64_t>(alpha - t) * q * (q - 1) // 2


cdef inline bint _prune(Search *S, int64_t value) noexcept nogil:
    if value > S.best:
        return True
    if value == S.best and S.have_witness and not S.count_ties:
        return True
    return False


cdef void _dfs(Search *S, int depth, uint64_t chosen, int64_t e, int start) noexcept nogil:
    cdef int r, v, u, c, take, need
    cdef int hist[66]
    cdef int64_t lb, ec
    cdef uint64_t m
    if S.timed_out:
        return
    S.nodes += 1
    if S.deadline > 0 and (S.nodes & 0xFFFF) == 0:
        if _now() > S.deadline:
            S.timed_out = True
            return
    r = S.s - depth
    if r == 0:
        if e < S.best:
            S.best = e
            S.count = 0
            S.nwit = 0
        S.count += 1
        S.have_witness = True
        if S.nwit < S.max_wit:
            S.wit[S.nwit] = chosen
            S.nwit += 1
        return
    if S.N - start < r:
        return
    for c in range(depth + 2):
        hist[c] = 0
    for v in range(start, S.N):
        hist[S.cost[v]] += 1
    lb = 0
    need = r
    for c in range(depth + 2):
        take = hist[c] if hist[c] < need else need
        lb += <int64_t>take * c
        need -= take
        if need == 0:
            break
    lb += _turan_floor(r, S.alpha)
    if _prune(S, e + lb):
        return
    for v in range(start, S.N - r + 1):
        ec = e + S.cost[v]
        if _prune(S, ec + _turan_floor(r, S.alpha)):
            continue
        m = S.adj[v]
        while m:
            u = __builtin_ctzll(m)
            S.cost[u] += 1
            m &= m - 1
        _dfs(S, depth + 1, chosen | ((<uint64_t>1) << v), ec, v + 1)
        m = S.adj[v]
        while m:
            u = __builtin_ctzll(m)
            S.cost[u] -= 1
            m &= m - 1
        if S.timed_out:
            return


def min_edges_search(adj, int s, prefix, int start, best, bint count_ties=True,
                     int max_witnesses=100, deadline=None, int alpha=0):
    """Minimum induced edge count over s-subsets containing ``prefix`` whose
    other members are all >= ``start``; see the Python twin for the contract."""
    cdef Search S
    cdef int N = len(adj), i, v, u
    cdef uint64_t chosen = 0, m
    cdef int64_t e = 0
    if N > 64:
        raise ValueError("graph too large for word-sized search")
    S.N = N
    S.s = s
    S.alpha = alpha
    for i in range(N):
        S.adj[i] = <uint64_t>adj[i]
        S.cost[i] = 0
    for v in prefix:
        e += S.cost[v]
        chosen |= (<uint64_t>1) << v
        m = S.adj[v]
        while m:
            u = __builtin_ctzll(m)
            S.cost[u] += 1
            m &= m - 1
    S.best = best
    S.count = 0
    S.count_ties = count_ties
    S.have_witness = False
    S.max_wit = max_witnesses
    S.nwit = 0
    S.wit = <uint64_t *>malloc(sizeof(uint64_t) * (max_witnesses + 1))
    S.nodes = 0
    S.deadline = -1.0
    if deadline is not None:
        # callers pass time.monotonic() deadlines; both clocks are CLOCK_MONOTONIC
        S.deadline = deadline
    S.timed_out = False
    cdef int depth0 = len(prefix)
    try:
        with nogil:
            _dfs(&S, depth0, chosen, e, start)
        witnesses = [int(S.wit[i]) for i in range(S.nwit)]
    finally:
        free(S.wit)
    return int(S.best), int(S.count), witnesses, not S.timed_out, int(S.nodes)


cdef bint _has_matching(uint64_t *sets, int count, int t) noexcept nogil:
    cdef int i, j, k
    cdef uint64_t x
    cdef uint64_t buf[64]
    if t <= 0:
        return True
    if count < t:
        return False
    for i in range(count - t + 1):
        x = sets[i]
        k = 0
        for j in range(i + 1, count):
            if (sets[j] & x) == 0:
                buf[k] = sets[j]
                k += 1
        if _has_matching(buf, k, t - 1):
            return True
    return False


cdef uint64_t _count_free(uint64_t *masks, int N, int idx, uint64_t *chosen, int nchosen,
                          int s) noexcept nogil:
    cdef uint64_t total
    cdef uint64_t v
    cdef uint64_t buf[64]
    cdef int i, k
    if idx == N:
        return 1
    total = _count_free(masks, N, idx + 1, chosen, nchosen, s)
    v = masks[idx]
    k = 0
    for i in range(nchosen):
        if (chosen[i] & v) == 0:
            buf[k] = chosen[i]
            k += 1
    if not _has_matching(buf, k, s - 1):
        chosen[nchosen] = v
        total += _count_free(masks, N, idx + 1, chosen, nchosen + 1, s)
    return total


def count_matching_free(masks, int s):
    cdef int N = len(masks), i
    cdef uint64_t arr[64]
    cdef uint64_t chosen[64]
    cdef uint64_t total
    if N > 64:
        raise ValueError("at most 64 candidate sets")
    if s < 1:
        raise ValueError("s must be positive")
    for i in range(N):
        arr[i] = <uint64_t>masks[i]
    with nogil:
        total = _count_free(arr, N, 0, chosen, 0, s)
    return int(total)
