"""Command-line interface: ``supersat <subcommand> [options]``.

Exit codes: 0 when every assertion holds, 1 on a violation (the witness is
printed), 2 on a usage or configuration error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import fileio, kernels
from .config import FORMATS, load_config
from .exactcomb import binom
from .report import allow_big_ints, emit_report

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


@dataclass
class Outcome:
    report: object
    text: str | None = None  # plain-format rendering, when a bare value reads better
    code: int = EXIT_OK


class UsageError(Exception):
    pass


# -- set families --------------------------------------------------------------

def _family_output(args, F, extra: dict) -> Outcome:
    text = fileio.format_family(F)
    if args.out:
        fileio.write_text(args.out, text)
        return Outcome({**extra, "size": len(F), "written": args.out}, f"wrote {len(F)} sets to {args.out}")
    return Outcome({**extra, "size": len(F), "sets": [list(s) for s in F.sets()]}, text.rstrip("\n"))


def cmd_disj_sets(args, cfg):
    from .setfam import disj_naive, disj_zeta
    F = fileio.parse_family(fileio.read_text(args.file))
    if args.method == "naive" or (args.method == "auto" and F.n > cfg.zeta_cap):
        value = disj_naive(F)
    else:
        value = disj_zeta(F, cfg.zeta_cap)
    return Outcome({"n": F.n, "k": F.k, "size": len(F), "disj": value}, str(value))


def cmd_lex(args, cfg):
    from .setfam import lex_segment
    return _family_output(args, lex_segment(args.n, args.k, args.s), {"n": args.n, "k": args.k})


def cmd_ball(args, cfg):
    from .setfam import ball_radius, ell_ball
    r = args.r if args.r is not None else ball_radius(args.n, args.k, args.ell, args.s)
    F = ell_ball(args.n, args.k, args.ell, args.s, r)
    return _family_output(args, F, {"n": args.n, "k": args.k, "ell": args.ell, "r": r})


def cmd_counterexample(args, cfg):
    from .oracle import closed_form_counterexample, verify_counterexample
    k = args.k
    if 2 <= k <= 8 and not args.closed_form:
        t = verify_counterexample(k, cfg.zeta_cap)
        ok = t.F_below_L and t.balls_above_L and t.gap == t.gap_expected
        lines = [
            f"k={t.k} n={t.n} s={t.s}",
            f"F (counterexample)  {t.disj_F}",
            f"L (lex)             {t.disj_L}",
        ]
        for b in t.balls:
            lines.append(f"{b.label:<4} r={b.radius:<3}        {b.disj}   inner-ball lower bound {b.inner_lower_bound}")
        lines.append(f"gap L - F = {t.gap}; F < L: {t.F_below_L}; every ball above L: {t.balls_above_L}")
        return Outcome(t, "\n".join(lines), EXIT_OK if ok else EXIT_VIOLATION)
    if not 2 <= k <= 15:
        raise UsageError("counterexample supports 2 <= k <= 8 by counting and k <= 15 in closed form")
    row = closed_form_counterexample(k)
    return Outcome(row, None)


def cmd_formula(args, cfg):
    from .permfam import disj_T_formula
    from .setfam import disj_lex_formula, lex_parameters, quad_upper_bound, star_upper_bound
    if args.perms:
        v = disj_T_formula(args.n, args.s)
        return Outcome({"n": args.n, "s": args.s, "disj_T": v}, str(v))
    if args.k is None:
        raise UsageError("--sets and --bounds need -k")
    v = disj_lex_formula(args.n, args.k, args.s)
    if args.sets:
        return Outcome({"n": args.n, "k": args.k, "s": args.s, "disj_lex": v}, str(v))
    r, gamma = lex_parameters(args.n, args.k, args.s)
    rep = {"n": args.n, "k": args.k, "s": args.s, "r": r, "gamma": gamma, "disj_lex": v}
    if r >= 1:
        rep["star_upper_bound"] = star_upper_bound(args.n, args.k, r, gamma)
        rep["quad_upper_bound"] = quad_upper_bound(args.s, r)
    return Outcome(rep)


def cmd_shadow(args, cfg):
    from .structcount import kk_lower_bound, shadow
    F = fileio.parse_family(fileio.read_text(args.file))
    S = shadow(F, args.s)
    bound = kk_lower_bound(len(F), F.k, args.s) if len(F) else 0
    ok = len(S) >= bound * (1 - 1e-9)
    rep = {"parameters": {"n": F.n, "k": F.k, "s": args.s, "size": len(F)},
           "value": len(S), "bound": bound, "pass": ok}
    return Outcome(rep, None, EXIT_OK if ok else EXIT_VIOLATION)


def cmd_count_families(args, cfg):
    from .structcount import count_no_matching_families
    v = count_no_matching_families(args.n, args.k, args.s, cfg.family_cap)
    return Outcome({"n": args.n, "k": args.k, "s": args.s, "count": v}, str(v))


def cmd_typicality(args, cfg):
    from .structcount import typicality_report
    rep = typicality_report(args.n, args.k, args.s)
    return Outcome(rep, None, EXIT_VIOLATION if rep.meets_target is False else EXIT_OK)


# -- permutations --------------------------------------------------------------

def cmd_disj_perms(args, cfg):
    from .permfam import disj_perm
    F = fileio.parse_perms(fileio.read_text(args.file))
    if F.n > cfg.perm_cap and len(F) > 5000:
        raise UsageError(f"n = {F.n} above perm_cap with a large family")
    v = disj_perm(F)
    return Outcome({"n": F.n, "size": len(F), "disj": v}, str(v))


def cmd_perm_lex(args, cfg):
    from .permfam import lex_perm_segment
    F = lex_perm_segment(args.n, args.s, cfg.perm_cap)
    text = fileio.format_perms(F)
    if args.out:
        fileio.write_text(args.out, text)
        return Outcome({"n": args.n, "size": len(F), "written": args.out}, f"wrote {len(F)} permutations to {args.out}")
    return Outcome({"n": args.n, "size": len(F), "perms": [list(p) for p in F.members]}, text.rstrip("\n"))


def cmd_spectrum(args, cfg):
    if args.kneser:
        import math
        from .setfam import kneser_adjacency, kneser_params
        from .spectral import symmetric_eigenvalues
        m, a = args.kneser
        p = kneser_params(m, a)
        ev, method = symmetric_eigenvalues(kneser_adjacency(m, a))
        rest = list(ev)
        rest.remove(min(rest, key=lambda x: abs(x - p.degree)))
        top = max((abs(x) for x in rest), default=0.0)
        ok = math.isclose(top, p.lam, rel_tol=1e-6)
        rep = {"m": m, "a": a, "degree": p.degree, "extreme_nontrivial": float(top),
               "expected": p.lam, "ok": ok, "method": method}
        return Outcome(rep, None, EXIT_OK if ok else EXIT_VIOLATION)
    from .permfam import derangement_graph_spectrum
    if args.n is None:
        raise UsageError("spectrum needs -n or --kneser M A")
    rep = derangement_graph_spectrum(args.n)
    return Outcome(rep, None, EXIT_OK if rep.lambda0_ok and rep.lambda1_ok else EXIT_VIOLATION)


# -- intersection graphs -------------------------------------------------------

def _interval_flags(points, n, rng):
    from .intgraph import build_intgraph, edge_overlap, prop25_intervals
    from .permfam import CosetSpec, exact_disj_to_union, exact_disj_within_union, exact_union_size
    from .verify import sample_outside
    G = build_intgraph(points)
    spec = CosetSpec(n, points)
    iv = prop25_intervals(G, n)
    w = exact_disj_within_union(spec)
    pi = sample_outside(points, n, rng, 2)
    v = exact_disj_to_union(pi, spec)
    return {
        "a_in": exact_union_size(spec) in iv.a,
        "b_in": v in iv.b,
        "b_refined_in": v in iv.b_refined(edge_overlap(G, pi)),
        "c_in": w in iv.c,
        "c_refined_in": w in iv.c_refined,
    }


def cmd_intgraph(args, cfg):
    import random
    from .intgraph import VIOLATED, build_intgraph, enumerate_grid_graphs, grid_row
    rng = random.Random(cfg.seed)
    if args.spec:
        spec = fileio.parse_spec(fileio.read_text(args.spec))
        forms = [spec.points]
    else:
        forms = list(enumerate_grid_graphs(args.sweep))
    rows, bad = [], []
    for form in forms:
        row = grid_row(form, build_intgraph(form))
        if args.n:
            row.update(_interval_flags(form, max(args.n, max(max(p) for p in form)), rng))
        rows.append(row)
        if VIOLATED in (row["I"], row["II"], row["III"]):
            bad.append(row)
    for row in bad:
        print(f"violation: {row['form']}", file=sys.stderr)
    return Outcome(rows, emit_report(rows, "csv").rstrip("\n"), EXIT_VIOLATION if bad else EXIT_OK)


def cmd_prop25(args, cfg):
    import random
    from .intgraph import build_intgraph, edge_overlap, prop25_intervals
    from .permfam import exact_disj_to_union, exact_disj_within_union, exact_union_size, in_union
    from .verify import sample_outside
    spec = fileio.parse_spec(fileio.read_text(args.spec))
    n, pts = spec.n, spec.points
    G = build_intgraph(pts)
    iv = prop25_intervals(G, n)
    rng = random.Random(cfg.seed)
    out = {"n": n, "points": [list(p) for p in pts]}
    u, w = exact_union_size(spec), exact_disj_within_union(spec)
    out["a"] = {"value": u, "lo": iv.a.lo, "hi": iv.a.hi, "in": u in iv.a}
    out["c"] = {"value": w, "lo": iv.c.lo, "hi": iv.c.hi, "in": w in iv.c}
    out["c_refined"] = {"value": w, "lo": iv.c_refined.lo, "hi": iv.c_refined.hi, "in": w in iv.c_refined}
    if args.pi:
        pis = [tuple(int(x) for x in args.pi.split())]
        if in_union(pis[0], pts):
            raise UsageError("the permutation lies in the union")
    else:
        pis = [sample_outside(pts, n, rng, f % 4) for f in range(args.samples)]
    out["b"] = []
    for pi in pis:
        v = exact_disj_to_union(pi, spec)
        ov = edge_overlap(G, pi)
        br = iv.b_refined(ov)
        out["b"].append({"pi": list(pi) if n <= 20 else "omitted", "value": v, "overlap": ov,
                         "in": v in iv.b, "refined_in": v in br})
    ok = out["a"]["in"] and out["c"]["in"] and out["c_refined"]["in"] and all(
        b["in"] and b["refined_in"] for b in out["b"])
    out["all_in"] = ok
    return Outcome(out, None, EXIT_OK if ok else EXIT_VIOLATION)


# -- oracles -------------------------------------------------------------------

def _minimizer(rep):
    return {
        "params": rep.params, "minimum": rep.minimum, "formula_value": rep.lex_or_T_value,
        "optimal": rep.lex_or_T_optimal, "num_minimizers": rep.num_minimizers,
        "witnesses": rep.sample_minimizers, "exhaustive": rep.exhaustive,
        "runtime": round(rep.runtime, 4),
    }


def cmd_oracle_sets(args, cfg):
    from .oracle import min_disj_sets
    sizes = range(binom(args.n, args.k) + 1) if args.s is None else [args.s]
    reps = [_minimizer(min_disj_sets(args.n, args.k, s, cfg.budget, cfg.workers)) for s in sizes]
    bad = [r for r in reps if not r["exhaustive"]]
    return Outcome(reps if args.s is None else reps[0], None, EXIT_VIOLATION if bad else EXIT_OK)


def cmd_oracle_perms(args, cfg):
    from .exactcomb import factorial
    from .oracle import min_disj_perms
    sizes = range(factorial(args.n) + 1) if args.s is None else [args.s]
    reps = [_minimizer(min_disj_perms(args.n, s, cfg.budget, cfg.workers)) for s in sizes]
    bad = [r for r in reps if not (r["exhaustive"] and r["optimal"])]
    return Outcome(reps if args.s is None else reps[0], None, EXIT_VIOLATION if bad else EXIT_OK)


def cmd_verify_all(args, cfg):
    from .verify import run_all
    only = {int(x) for x in args.only.split(",")} if args.only else None
    results = run_all(cfg, only)
    lines = []
    for r in results:
        lines.append(r.line())
        lines += [f"    {n}" for n in r.notes]
    rows = [{"criterion": r.number, "title": r.title, "passed": r.passed, "detail": r.detail,
             "seconds": round(r.seconds, 2), "notes": r.notes} for r in results]
    ok = all(r.passed for r in results)
    return Outcome(rows, "\n".join(lines), EXIT_OK if ok else EXIT_VIOLATION)


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file")
    common.add_argument("--format", choices=FORMATS, help="output format (default plain)")
    common.add_argument("--time-budget", type=float, help="seconds per search, 0 for none")
    common.add_argument("--workers", type=int)
    common.add_argument("--seed", type=int)

    p = argparse.ArgumentParser(prog="supersat", description="Exact counting of disjoint pairs in set and permutation families.")
    p.add_argument("--version", action="version", version="supersat 0.1.0 (" + kernels.BACKEND_NAME + " kernels)")
    sub = p.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("disj-sets", cmd_disj_sets, "count disjoint pairs in a set-family file")
    sp.add_argument("--file", required=True)
    sp.add_argument("--method", choices=("auto", "naive", "zeta"), default="auto")

    sp = add("disj-perms", cmd_disj_perms, "count disjoint pairs in a permutation file")
    sp.add_argument("--file", required=True)

    sp = add("lex", cmd_lex, "write the first s k-sets in lex order")
    for flag in ("-n", "-k", "-s"):
        sp.add_argument(flag, type=int, required=True)
    sp.add_argument("--out")

    sp = add("perm-lex", cmd_perm_lex, "write the first s permutations in lex order")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-s", type=int, required=True)
    sp.add_argument("--out")

    sp = add("ball", cmd_ball, "write an ell-ball of size s")
    for flag in ("-n", "-k", "-s"):
        sp.add_argument(flag, type=int, required=True)
    sp.add_argument("-l", "--ell", type=int, required=True)
    sp.add_argument("-r", type=int)
    sp.add_argument("--out")

    sp = add("counterexample", cmd_counterexample, "counterexample table at n = 3k - 1")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--closed-form", action="store_true", help="closed forms only, no counting")

    sp = add("formula", cmd_formula, "closed-form disjoint-pair counts and bounds")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--sets", action="store_true")
    g.add_argument("--perms", action="store_true")
    g.add_argument("--bounds", action="store_true")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-k", type=int)
    sp.add_argument("-s", type=int, required=True)

    sp = add("intgraph", cmd_intgraph, "intersection-graph statistics, or a sweep over grid classes (CSV)")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--spec")
    g.add_argument("--sweep", type=int, metavar="K1MAX")
    sp.add_argument("-n", type=int, help="also test interval containment at this n (>= 5)")

    sp = add("prop25", cmd_prop25, "interval checks for one coset union")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--pi", help="space-separated images of a permutation outside the union")
    sp.add_argument("--samples", type=int, default=4)

    sp = add("oracle-sets", cmd_oracle_sets, "exhaustive minimum disj over s-families of k-sets")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("-s", type=int, help="omit for every size")

    sp = add("oracle-perms", cmd_oracle_perms, "exhaustive minimum disj over s-families of S_n")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-s", type=int, help="omit for every size")

    sp = add("spectrum", cmd_spectrum, "derangement or Kneser graph eigenvalues")
    sp.add_argument("-n", type=int)
    sp.add_argument("--kneser", type=int, nargs=2, metavar=("M", "A"))

    sp = add("count-families", cmd_count_families, "families with no s pairwise disjoint members")
    for flag in ("-n", "-k", "-s"):
        sp.add_argument(flag, type=int, required=True)

    sp = add("typicality", cmd_typicality, "exact typicality margin")
    for flag in ("-n", "-k", "-s"):
        sp.add_argument(flag, type=int, required=True)

    sp = add("shadow", cmd_shadow, "shadow of a family file against the Kruskal-Katona floor")
    sp.add_argument("--file", required=True)
    sp.add_argument("-s", type=int, required=True)

    sp = add("verify-all", cmd_verify_all, "run the full property suite")
    sp.add_argument("--only", help="comma-separated criterion numbers")
    return p


def main(argv=None) -> int:
    allow_big_ints()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = load_config(args.config, format=args.format, time_budget=args.time_budget,
                          workers=args.workers, seed=args.seed)
        out = args.func(args, cfg)
    except (UsageError, ValueError, OSError) as exc:
        print(f"supersat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"supersat: violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    if cfg.format == "plain" and out.text is not None:
        sys.stdout.write(out.text + "\n")
    else:
        sys.stdout.write(emit_report(out.report, cfg.format))
    return out.code


if __name__ == "__main__":
    sys.exit(main())
