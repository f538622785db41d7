"""Compiled vs pure-Python kernels on representative inputs.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row shows the best wall time of each backend and the speed-up; results
are checked for equality before timing is reported.
"""
import argparse
import time

import numpy as np

from supersat import kernels
from supersat.oracle import kneser_bits
from supersat.permfam import lex_perm_segment
from supersat.setfam import _lex_masks, counterexample_family, lex_segment


def best_time(fn, repeat):
    out, best = None, float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def cases():
    F = lex_segment(12, 4, 300).masks()
    yield "count_disjoint_pairs, 300 sets", lambda b: b.count_disjoint_pairs(F)
    P = lex_perm_segment(6, 360).masks()
    yield "count_disjoint_pairs, 360 perms", lambda b: b.count_disjoint_pairs(P)
    C = counterexample_family(5).masks()
    yield "zeta_disjoint_pairs, n=14", lambda b: b.zeta_disjoint_pairs(C, 14)
    _, adj = kneser_bits(6, 2)
    yield "subset_edge_counts, KG(6,2)", lambda b: b.subset_edge_counts(adj, 15)
    _, adj7 = kneser_bits(7, 2)
    yield "min_edges_search, KG(7,2) s=12", lambda b: b.min_edges_search(adj7, 12, [0], 1, 28, True, 100, None, 6)[:2]
    level = list(_lex_masks(6, 2))
    yield "count_matching_free, (6,2,3)", lambda b: b.count_matching_free(level, 3)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.compiled_backend is None:
        print("compiled kernels are not built; nothing to compare")
        return
    print(f"{'case':<36}{'cython s':>12}{'python s':>12}{'speed-up':>10}")
    for name, fn in cases():
        rc, tc = best_time(lambda: fn(kernels.compiled_backend), args.repeat)
        rp, tp = best_time(lambda: fn(kernels.python_backend), args.repeat)
        same = np.array_equal(rc, rp) if isinstance(rc, np.ndarray) else rc == rp
        if not same:
            raise SystemExit(f"backends disagree on {name}: {rc} vs {rp}")
        print(f"{name:<36}{tc:>12.4f}{tp:>12.4f}{tp / max(tc, 1e-9):>9.1f}x")


if __name__ == "__main__":
    main()
