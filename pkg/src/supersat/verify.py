"""The thirteen acceptance checks, shared by ``supersat verify-all`` and the test suite.

Each check returns a CriterionResult. ``passed`` covers both the mathematical
assertion and the time limit; ``notes`` carries anything worth printing
(discrepancies outside a theorem's range, degenerate cases, witnesses).
"""
from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field

from . import kernels
from .config import RunConfig
from .exactcomb import binom, factorial
from .intgraph import (
    VIOLATED, build_intgraph, claim_a5_check, edge_overlap, enumerate_grid_graphs,
    is_canonical, prop25_intervals,
)
from .oracle import katona_check, min_disj_perms, min_disj_sets, verify_counterexample
from .permfam import (
    CosetSpec, brute_disj_to_family, clique_members, cliques, derangement_graph_spectrum,
    disj_perm, disj_T_formula, exact_cross_clique_disj, exact_disj_to_clique,
    exact_disj_to_union, exact_disj_within_union, exact_union_size, in_union,
    lex_perm_segment, mx_class_size, union_members,
)
from .setfam import (
    SetFamily, _lex_masks, disj_lex_formula, disj_naive, kneser_adjacency, kneser_params,
    lex_parameters, lex_segment,
)
from .spectral import symmetric_eigenvalues
from .structcount import (
    bollobas_check, count_no_matching_families, enumerate_maximal_families, generator_set_pairs,
    hilton_milner_bound, kk_lower_bound, minimal_generating, pq_shadow_check, shadow,
    typicality_report,
)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0
    limit: float = 0.0
    notes: list = field(default_factory=list)

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"[{tag}] {self.number:2d}. {self.title}: {self.detail} ({self.seconds:.1f}s, limit {self.limit:.0f}s)"


def _timed(number, title, limit):
    def wrap(fn):
        def run(cfg: RunConfig | None = None) -> CriterionResult:
            cfg = cfg or RunConfig()
            t0 = time.perf_counter()
            ok, detail, notes = fn(cfg)
            dt = time.perf_counter() - t0
            if dt > limit:
                ok, detail = False, f"{detail}; over the time limit"
            return CriterionResult(number, title, bool(ok), detail, dt, limit, notes)
        run.number = number
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


# -- 1, 5: closed forms against direct counting -------------------------------

@_timed(1, "lex formula vs direct count", 60)
def lex_formula_check(cfg):
    bad, cases = [], 0
    for k in (2, 3):
        for n in range(k, 11):
            for s in range(binom(n, k) + 1):
                cases += 1
                direct = disj_naive(lex_segment(n, k, s))
                if direct != disj_lex_formula(n, k, s):
                    bad.append((n, k, s, direct))
    return not bad, f"{cases} cases, {len(bad)} mismatches", [f"mismatch {b}" for b in bad[:10]]


@_timed(5, "T formula vs direct count", 120)
def perm_formula_check(cfg):
    bad, cases = [], 0
    for n in range(1, 6):
        for s in range(factorial(n) + 1):
            cases += 1
            direct = disj_perm(lex_perm_segment(n, s))
            if direct != disj_T_formula(n, s):
                bad.append((n, s, direct))
    return not bad, f"{cases} cases, {len(bad)} mismatches", [f"mismatch {b}" for b in bad[:10]]


# -- 2, 3, 4: exhaustive minimisers --------------------------------------------

def lex_theorem_applies(n: int, k: int, s: int) -> bool:
    """Whether (n, k, s) lies in the proven range for lex optimality."""
    r, _ = lex_parameters(n, k, s)
    return r <= 1 or n > 108 * (k ** 3 * r + k * k * r * r)


@_timed(2, "lex optimality for k=2, n=5..7", 600)
def lex_optimality_check(cfg):
    notes, failures, cases = [], 0, 0
    for n in (5, 6, 7):
        for s in range(binom(n, 2) + 1):
            cases += 1
            rep = min_disj_sets(n, 2, s, cfg.budget, cfg.workers)
            if not rep.exhaustive or rep.minimum > rep.lex_or_T_value:
                failures += 1
                notes.append(f"n={n} s={s}: search incomplete or above lex")
            elif not rep.lex_or_T_optimal:
                inside = lex_theorem_applies(n, 2, s)
                failures += inside
                notes.append(
                    f"n={n} s={s}: min {rep.minimum} < lex {rep.lex_or_T_value}"
                    f" ({'inside' if inside else 'outside'} proven range), witness {rep.sample_minimizers[0]}"
                )
    return not failures, f"{cases} cases, {len(notes)} below lex, {failures} inside the proven range", notes


@_timed(3, "Katona minimum at star size + 1", 300)
def katona_criterion(cfg):
    out, ok = [], True
    for n, k in ((5, 2), (6, 2), (7, 2), (7, 3)):
        rep = katona_check(n, k, cfg.budget)
        good = rep.exhaustive and rep.minimum == rep.extra["expected"]
        ok &= good
        out.append(f"({n},{k})={rep.minimum}")
    return ok, "minima " + " ".join(out), []


@_timed(4, "permutation optimality at n=4", 1800)
def perm_optimality_check(cfg):
    notes, ok = [], True
    mins = {}
    for s in range(25):
        rep = min_disj_perms(4, s, cfg.budget, cfg.workers)
        mins[s] = rep.minimum
        if not (rep.exhaustive and rep.lex_or_T_optimal):
            ok = False
            notes.append(f"s={s}: min {rep.minimum} vs T {rep.lex_or_T_value}")
    # whole cosets: C(k,2) 3! (d_3 + d_2)
    for kk in (1, 2, 3):
        if mins[6 * kk] != binom(kk, 2) * 6 * 3:
            ok = False
            notes.append(f"s={6 * kk}: coset union value {mins[6 * kk]}")
    ok &= mins[12] == 18
    return ok, f"25 sizes, min at s=12 is {mins[12]}", notes


# -- 6: exact engines against S_n enumeration ------------------------------------

def _check_spec_engines(spec: CosetSpec, pis=None, pairs=None) -> list[str]:
    """Compare every engine with enumeration on one spec; returns mismatch descriptions."""
    n, pts = spec.n, spec.points
    bad = []
    union = union_members(spec)
    union_set = set(union.members)
    everything = list(itertools.permutations(range(1, n + 1)))
    outside = [p for p in everything if p not in union_set] if pis is None else pis
    cl = cliques(pts)
    members = {X: clique_members(X, n) for X in cl}
    if exact_union_size(spec) != len(union):
        bad.append(f"union size {spec}")
    for pi in outside:
        if exact_disj_to_union(pi, spec) != brute_disj_to_family(pi, union.members):
            bad.append(f"disj_to_union {pi} {spec}")
    for X in cl:
        for pi in outside:
            if not in_union(pi, X) and exact_disj_to_clique(pi, X) != brute_disj_to_family(pi, members[X].members):
                bad.append(f"disj_to_clique {pi} {X}")
    for X, Y in (pairs if pairs is not None else itertools.product(cl, repeat=2)):
        brute = kernels.count_cross_disjoint(members[X].masks(), members[Y].masks())
        if exact_cross_clique_disj(X, Y, n) != brute:
            bad.append(f"cross {X} {Y} n={n}")
    if exact_disj_within_union(spec) != disj_perm(union):
        bad.append(f"within_union {spec}")
    hits = {}
    for p in union.members:
        key = tuple(sorted(pt for pt in pts if p[pt[0] - 1] == pt[1]))
        hits[key] = hits.get(key, 0) + 1
    for X in cl:
        if mx_class_size(spec, X) != hits.get(X, 0):
            bad.append(f"mx_class {X} {spec}")
    return bad


@_timed(6, "coset engines vs enumeration", 600)
def engines_check(cfg):
    rng = random.Random(cfg.seed)
    bad, specs = [], 0
    # every spec of at most 3 points for n <= 4
    for n in range(1, 5):
        grid = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        for m in range(1, 4):
            for pts in itertools.combinations(grid, m):
                specs += 1
                bad += _check_spec_engines(CosetSpec(n, pts))
    # n = 5: every grid class that fits, up to symmetry, plus random specs
    for form in enumerate_grid_graphs(5):
        if max(max(p) for p in form) <= 5:
            specs += 1
            bad += _check_spec_engines(CosetSpec(5, form))
    grid5 = [(i, j) for i in range(1, 6) for j in range(1, 6)]
    for _ in range(60):
        specs += 1
        bad += _check_spec_engines(CosetSpec(5, rng.sample(grid5, rng.randint(1, 6))))
    # n = 6: sampled specs, outside permutations and clique pairs
    grid6 = [(i, j) for i in range(1, 7) for j in range(1, 7)]
    for _ in range(25):
        spec = CosetSpec(6, rng.sample(grid6, rng.randint(2, 6)))
        pis = []
        while len(pis) < 40:
            p = list(range(1, 7))
            rng.shuffle(p)
            if not in_union(p, spec.points):
                pis.append(tuple(p))
        cl = cliques(spec.points)
        pairs = [(rng.choice(cl), rng.choice(cl)) for _ in range(15)]
        specs += 1
        bad += _check_spec_engines(spec, pis, pairs)
    return not bad, f"{specs} specs, {len(bad)} mismatches", bad[:10]


# -- 7, 8, 9: intersection graphs ----------------------------------------------

def sample_outside(points, n: int, rng: random.Random, force: int = 0) -> tuple:
    """A random permutation outside the union; ``force`` steers some spec columns
    onto spec rows so the overlap statistic is non-trivial."""
    rows = sorted({i for i, _ in points})
    cols = sorted({j for _, j in points})
    while True:
        p = list(range(1, n + 1))
        rng.shuffle(p)
        for _ in range(force):
            j, i = rng.choice(cols), rng.choice(rows)
            if (i, j) in points:
                continue
            at = p.index(j)
            p[at], p[i - 1] = p[i - 1], p[at]
        if not in_union(p, points):
            return tuple(p)


@_timed(7, "interval estimates at n=100, 1000", 300)
def intervals_check(cfg):
    rng = random.Random(cfg.seed)
    bad, checks = [], 0
    forms = list(enumerate_grid_graphs(5))
    for n in (100, 1000):
        for form in forms:
            spec = CosetSpec(n, form)
            G = build_intgraph(form)
            iv = prop25_intervals(G, n)
            u = exact_union_size(spec)
            w = exact_disj_within_union(spec)
            checks += 3
            if u not in iv.a:
                bad.append(f"a n={n} {form}")
            if w not in iv.c:
                bad.append(f"c n={n} {form}")
            if w not in iv.c_refined:
                bad.append(f"c refined n={n} {form}")
            for force in (0, 1, 2, 3):
                pi = sample_outside(form, n, rng, force)
                v = exact_disj_to_union(pi, spec)
                checks += 2
                if v not in iv.b:
                    bad.append(f"b n={n} {form} pi-overlap {edge_overlap(G, pi)}")
                if v not in iv.b_refined(edge_overlap(G, pi)):
                    bad.append(f"b refined n={n} {form} pi-overlap {edge_overlap(G, pi)}")
    return not bad, f"{len(forms)} classes, {checks} containments, {len(bad)} misses", bad[:10]


@_timed(8, "intersection-graph inequality sweep", 600)
def a5_sweep(cfg):
    counts, bad = {}, []
    forms = list(enumerate_grid_graphs(6))
    for form in forms:
        st = claim_a5_check(build_intgraph(form))
        key = (st.I, st.II, st.III)
        counts[key] = counts.get(key, 0) + 1
        if VIOLATED in key:
            bad.append(f"{form}: {key}")
    notes = [f"{n} classes with (I, II, III) = {k}" for k, n in sorted(counts.items())]
    return not bad, f"{len(forms)} classes, {len(bad)} violations", notes + bad


@_timed(9, "canonical dichotomy for k1 <= 4", 600)
def dichotomy_check(cfg):
    bad, notes, cases = [], [], 0
    for form in enumerate_grid_graphs(4):
        canon = is_canonical(build_intgraph(form))
        size = max(max(p) for p in form)
        for n in range(max(size, 1), 8):
            spec = CosetSpec(n, form)
            w = exact_disj_within_union(spec)
            t = disj_T_formula(n, exact_union_size(spec))
            good = (w == t) if canon else (w > t)
            if n >= 5:
                cases += 1
                if not good:
                    bad.append(f"n={n} {form} canonical={canon} disj={w} T={t}")
            elif not good:
                notes.append(f"small n={n} {form} canonical={canon} disj={w} T={t} (below n=5, not asserted)")
    return not bad, f"{cases} cases at 5 <= n <= 7, {len(bad)} failures", notes + bad


# -- 10: counterexample --------------------------------------------------------

@_timed(10, "counterexample table k=5..8", 1800)
def counterexample_check(cfg, kmax: int = 8):
    ok, parts = True, []
    for k in range(5, kmax + 1):
        t = verify_counterexample(k, cfg.zeta_cap)
        ok &= t.F_below_L and t.balls_above_L and t.gap == t.gap_expected
        if k == 5:
            ok &= t.disj_F == 8694 and t.disj_L == 8750
        parts.append(f"k={k}: {t.disj_F}<{t.disj_L}<{min(b.disj for b in t.balls)}")
    return ok, "; ".join(parts), []


# -- 11: spectra ---------------------------------------------------------------

@_timed(11, "derangement and Kneser spectra", 300)
def spectrum_check(cfg):
    notes, ok = [], True
    for n in range(2, 6):
        rep = derangement_graph_spectrum(n)
        ok &= rep.lambda0_ok and rep.lambda1_ok
        notes.append(f"Gamma_{n}: lambda0={rep.lambda0:.6f} lambda1={rep.lambda1:.6f} ({rep.method})")
    for m in range(2, 9):
        for a in range(1, m // 2 + 1):
            p = kneser_params(m, a)
            ev, _ = symmetric_eigenvalues(kneser_adjacency(m, a))
            rest = list(ev)
            rest.remove(min(rest, key=lambda x: abs(x - p.degree)))
            top = max((abs(x) for x in rest), default=0.0)
            good = math.isclose(top, p.lam, rel_tol=1e-6)
            ok &= good
            if not good:
                notes.append(f"KG({m},{a}): {top} vs {p.lam}")
    return ok, "Gamma_2..5 extremes and KG(m,a) for m <= 8", notes


# -- 12, 13: structure ---------------------------------------------------------

@_timed(12, "family counts and typicality margin", 360)
def typical_structure_check(cfg):
    c1 = count_no_matching_families(4, 2, 2)
    c2 = count_no_matching_families(6, 3, 2)
    ok = c1 == 27 and c2 == 59049
    misses = []
    for n in range(620, 1001, 20):
        rep = typicality_report(n, 3, 2)
        if not (rep.target_applies and rep.meets_target):
            misses.append(n)
    ok &= not misses
    return ok, f"counts {c1}, {c2}; margin target missed at {misses or 'no n'}", []


def _random_family(rng, n, k, size):
    pool = list(_lex_masks(n, k))
    return SetFamily(n, k, tuple(rng.sample(pool, min(size, len(pool)))))


@_timed(13, "shadow pipeline on maximal families", 900)
def pipeline_check(cfg):
    rng = random.Random(cfg.seed)
    bad, fams, kk_cases = [], 0, 0

    def kk_ok(F):
        nonlocal kk_cases
        for t in range(1, F.k):
            kk_cases += 1
            if len(shadow(F, t)) < kk_lower_bound(len(F), F.k, t) * (1 - 1e-9):
                bad.append(f"KK {F.n},{F.k} |F|={len(F)} t={t}")

    def gen_ok(F, s):
        G0 = minimal_generating(F, s)
        valid, m, bound = bollobas_check(generator_set_pairs(G0, s))
        if not valid or m > binom(s * F.k, F.k):
            bad.append(f"generator {F.n},{F.k},{s} size {m}")

    for k in (1, 2, 3):
        for n in range(k, 8):
            maxfams = enumerate_maximal_families(n, k, 2)
            non_star = []
            for F in maxfams:
                fams += 1
                if not pq_shadow_check(F):
                    bad.append(f"pq {n},{k} {F.sets()}")
                gen_ok(F, 2)
                kk_ok(F)
                if not any(all(m & (1 << c) for m in F.members) for c in range(n)):
                    non_star.append(len(F))
            if k >= 2 and n >= 2 * k + 1:
                hm = hilton_milner_bound(n, k)
                if not non_star or max(non_star) != hm:
                    bad.append(f"HM {n},{k}: largest non-star {max(non_star, default=None)} vs {hm}")
    for n in range(4, 7):
        for F in enumerate_maximal_families(n, 2, 3):
            fams += 1
            gen_ok(F, 3)
    for _ in range(500):
        n = rng.randint(3, 12)
        k = rng.randint(2, min(4, n - 1))
        kk_ok(_random_family(rng, n, k, rng.randint(1, 60)))
    return not bad, f"{fams} maximal families, {kk_cases} shadow bounds, {len(bad)} failures", bad[:10]


CRITERIA = [
    lex_formula_check, lex_optimality_check, katona_criterion, perm_optimality_check,
    perm_formula_check, engines_check, intervals_check, a5_sweep, dichotomy_check,
    counterexample_check, spectrum_check, typical_structure_check, pipeline_check,
]
CRITERIA.sort(key=lambda f: f.number)


def run_all(cfg: RunConfig | None = None, only=None) -> list[CriterionResult]:
    cfg = cfg or RunConfig()
    return [c(cfg) for c in CRITERIA if only is None or c.number in only]


__all__ = ["CriterionResult", "CRITERIA", "run_all", "lex_theorem_applies", "sample_outside"] + [
    c.__name__ for c in CRITERIA
]
