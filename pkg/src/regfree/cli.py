"""Command-line entry point.

Subcommands: construct, detect-regular, certify, chif, degeneracy,
subsample, bounds (reg/frac/union), sweep.  All rationals are serialized
as "a/b" strings in lowest terms; huge reals as decimal strings of their
natural logs.  Exit codes: 0 success, 2 inconclusive outcome present,
1 error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from fractions import Fraction

import mpmath as mp

from . import __version__, bounds as bounds_mod
from .construction import (
    LayeredGraph,
    build,
    bipartite_variant,
    explicit_params,
    paper_params,
    paper_weighting,
)
from .density import (
    CERTIFIED,
    prefix_certificate_3reg_bipartite,
    prefix_certificate_4reg,
)
from .fractional import ColumnLimitExceeded, chi_f_exact, chi_f_lower_bound
from .graph import Graph, degeneracy
from .regular import BUDGET_EXCEEDED, DEFAULT_BUDGET, find_k_regular
from .subsample import SubsampleParams, harris_subsample

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2


def frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


def _read_graph(path: str):
    with open(path) as fh:
        return Graph.from_json(fh.read())


def _layered(g: Graph, layers) -> LayeredGraph:
    if layers is None:
        raise ValueError("input file carries no layer structure")
    return LayeredGraph(g, layers)


def _emit(doc, out_path=None) -> None:
    text = json.dumps(doc, indent=2)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_construct(args) -> int:
    if (args.sizes is None) == (args.paper_n is None):
        raise ValueError("pass exactly one of --sizes, --paper-n")
    if args.sizes is not None:
        sizes = [int(s) for s in args.sizes.split(",")]
        params = explicit_params(sizes, seed=args.seed)
    else:
        log_n = mp.log(bounds_mod.parse_real(args.paper_n))
        params = paper_params(log_n=log_n, seed=args.seed)
    lg = build(params)
    lg.check_invariants()
    text = lg.graph.to_json(layers=lg.layer_sizes)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_detect_regular(args) -> int:
    g, _ = _read_graph(args.infile)
    res = find_k_regular(g, args.k, budget=args.budget)
    doc = {
        "outcome": res.outcome,
        "witness": None
        if res.witness is None
        else {
            "vertices": list(res.witness.vertices),
            "edges": [list(e) for e in res.witness.edges],
            "k": res.witness.k,
        },
        "nodes_expanded": res.nodes_expanded,
    }
    _emit(doc, args.out)
    return EXIT_INCONCLUSIVE if res.outcome == BUDGET_EXCEEDED else EXIT_OK


def cmd_certify(args) -> int:
    g, layers = _read_graph(args.infile)
    lg = _layered(g, layers)
    threshold = parse_frac(args.threshold)
    if args.k == 4:
        outcome = prefix_certificate_4reg(lg, threshold)
    elif args.k == 3:
        outcome = prefix_certificate_3reg_bipartite(lg, threshold)
    else:
        raise ValueError("--k must be 3 or 4")
    doc = {
        "k": outcome.k,
        "threshold": frac_str(threshold),
        "verdict": outcome.verdict,
        "prefixes": [
            {
                "i": p.i,
                "prefix_size": p.prefix_size,
                "max_density": None if p.max_density is None else frac_str(p.max_density),
                "below_threshold": p.below_threshold,
                "active": p.active,
                "side_condition_ok": p.side_condition_ok,
            }
            for p in outcome.prefixes
        ],
    }
    _emit(doc, args.out)
    return EXIT_OK if outcome.verdict == CERTIFIED else EXIT_INCONCLUSIVE


def cmd_chif(args) -> int:
    g, layers = _read_graph(args.infile)
    if args.lower_bound:
        if args.weights == "paper":
            w = paper_weighting(_layered(g, layers))
        else:
            w = {v: Fraction(1) for v in range(g.n)}
        lb = chi_f_lower_bound(g, w)
        _emit(
            {
                "chi_f_lower_bound": frac_str(lb),
                "total_weight": frac_str(sum(w.values(), Fraction(0))),
            },
            args.out,
        )
        return EXIT_OK
    try:
        value, primal, dual = chi_f_exact(g, column_limit=args.column_limit)
    except ColumnLimitExceeded as exc:
        _emit(
            {
                "chi_f": None,
                "lower": frac_str(exc.lower),
                "upper": frac_str(exc.upper),
                "outcome": "column_limit_exceeded",
            },
            args.out,
        )
        return EXIT_INCONCLUSIVE
    doc = {
        "chi_f": frac_str(value),
        "columns": [
            {"set": list(vs), "coefficient": frac_str(c)}
            for vs, c in primal.columns
        ],
        "dual": {str(v): frac_str(x) for v, x in sorted(dual.weights.items()) if x},
    }
    _emit(doc, args.out)
    return EXIT_OK


def cmd_degeneracy(args) -> int:
    g, _ = _read_graph(args.infile)
    d, ordering = degeneracy(g)
    _emit({"degeneracy": d, "ordering": list(ordering.order)}, args.out)
    return EXIT_OK


def cmd_subsample(args) -> int:
    g, layers = _read_graph(args.infile)
    d, ordering = degeneracy(g)
    threshold = args.threshold if args.threshold is not None else max(d, 1)
    p = parse_frac(args.p)
    if layers is not None:
        w = paper_weighting(_layered(g, layers))
    else:
        w = {v: Fraction(1) for v in range(g.n)}
    trials = []
    total = Fraction(0)
    for t in range(args.trials):
        params = SubsampleParams(p=p, degen_threshold=threshold, seed=args.seed + t)
        res = harris_subsample(g, ordering, params, w)
        total += res.retained_weight
        trials.append(
            {
                "seed": params.seed,
                "x_size": len(res.x),
                "y_size": len(res.y),
                "retained_weight": frac_str(res.retained_weight),
            }
        )
    doc = {
        "p": frac_str(p),
        "threshold": threshold,
        "trials": trials,
        "mean_retained_weight": frac_str(total / args.trials),
    }
    _emit(doc, args.out)
    return EXIT_OK


def _chain_doc(rep) -> dict:
    return {
        "steps": [
            {
                "label": s.label,
                "log_left": mp.nstr(s.left, 30),
                "log_right": mp.nstr(s.right, 30),
                "holds": s.holds,
                "identity": s.is_identity,
            }
            for s in rep.steps
        ],
        "first_failure": rep.first_failure,
        "all_hold": rep.all_hold,
        "dps": rep.dps,
    }


def cmd_bounds(args) -> int:
    log_n = mp.log(bounds_mod.parse_real(args.n))
    if args.which == "reg":
        rep = bounds_mod.reg_chain(log_n=log_n, i=args.i, x=args.x)
        _emit(_chain_doc(rep), args.out)
        return EXIT_OK if rep.all_hold else EXIT_INCONCLUSIVE
    if args.which == "frac":
        rep = bounds_mod.frac_chain(log_n=log_n, i=args.i, p_i=mp.mpf(args.p_i))
        _emit(_chain_doc(rep), args.out)
        return EXIT_OK if rep.all_hold else EXIT_INCONCLUSIVE
    rep = bounds_mod.union_bounds(log_n=log_n)
    doc = {
        "r": mp.nstr(rep.r, 30),
        "geometric_closed": mp.nstr(rep.geometric_closed, 30),
        "doubling_bound": mp.nstr(rep.doubling_bound, 30),
        "closure_holds": rep.closure_holds,
        "partial_matches": rep.partial_matches,
        "per_layer": [
            {"i": i, "log_left": mp.nstr(l, 30), "log_right": mp.nstr(r, 30), "holds": h}
            for i, l, r, h in rep.per_layer
        ],
        "all_hold": rep.all_hold,
        "dps": rep.dps,
    }
    _emit(doc, args.out)
    return EXIT_OK if rep.all_hold else EXIT_INCONCLUSIVE


ALL_CHECKS = (
    "certify4",
    "certify3",
    "detect4",
    "detect3",
    "chif_lb",
    "chif_exact",
    "degeneracy",
    "subsample",
)


def run_checks(sizes, seed: int, checks) -> dict:
    """One seed's worth of checks; everything but timings is deterministic."""
    lg = build(explicit_params(sizes, seed=seed))
    lg.check_invariants()
    g = lg.graph
    out: dict = {}
    if "degeneracy" in checks:
        d, _ = degeneracy(g)
        out["degeneracy"] = {"value": d, "within_bound": d <= lg.num_layers - 1}
    if "detect4" in checks:
        r = find_k_regular(g, 4)
        out["detect4"] = {"outcome": r.outcome, "nodes_expanded": r.nodes_expanded}
    if "detect3" in checks:
        r = find_k_regular(bipartite_variant(lg), 3)
        out["detect3"] = {"outcome": r.outcome, "nodes_expanded": r.nodes_expanded}
    if "certify4" in checks:
        c = prefix_certificate_4reg(lg)
        out["certify4"] = {"verdict": c.verdict}
    if "certify3" in checks:
        c = prefix_certificate_3reg_bipartite(lg)
        out["certify3"] = {"verdict": c.verdict}
    if "chif_lb" in checks:
        w = paper_weighting(lg)
        out["chif_lb"] = {
            "value": frac_str(chi_f_lower_bound(g, w)),
            "total_weight": frac_str(sum(w.values(), Fraction(0))),
        }
    if "chif_exact" in checks:
        try:
            value, _, _ = chi_f_exact(g)
            out["chif_exact"] = {"value": frac_str(value)}
        except ColumnLimitExceeded as exc:
            out["chif_exact"] = {
                "value": None,
                "lower": frac_str(exc.lower),
                "upper": frac_str(exc.upper),
            }
    if "subsample" in checks:
        d, ordering = degeneracy(g)
        params = SubsampleParams(
            p=Fraction(1, 4), degen_threshold=max(d, 1), seed=seed
        )
        res = harris_subsample(g, ordering, params, paper_weighting(lg))
        out["subsample"] = {
            "x_size": len(res.x),
            "retained_weight": frac_str(res.retained_weight),
        }
    return out


def cmd_sweep(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    lo, hi = (int(x) for x in args.seeds.split(":"))
    checks = args.checks.split(",") if args.checks else list(ALL_CHECKS)
    for c in checks:
        if c not in ALL_CHECKS:
            raise ValueError(f"unknown check {c!r}")
    records = []
    inconclusive = False
    for seed in range(lo, hi):
        t0 = time.monotonic()
        try:
            outcomes = run_checks(sizes, seed, checks)
            error = None
        except Exception as exc:  # per-seed errors never abort the sweep
            outcomes, error = {}, repr(exc)
        rec = {
            "sizes": sizes,
            "seed": seed,
            "checks": outcomes,
            "error": error,
            "elapsed_s": round(time.monotonic() - t0, 6),
            "version": __version__,
        }
        for v in outcomes.values():
            if v.get("outcome") == BUDGET_EXCEEDED or v.get("verdict") == "inconclusive":
                inconclusive = True
        records.append(rec)
    nd_path = args.out + ".ndjson"
    with open(nd_path, "w") as fh:
        for rec in records:
            fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
    # summary: per-check success frequencies
    summary = {}
    for c in checks:
        n_ok = 0
        n_run = 0
        for rec in records:
            r = rec["checks"].get(c)
            if r is None:
                continue
            n_run += 1
            ok = (
                r.get("outcome") == "not_found"
                or r.get("verdict") == "certified"
                or r.get("within_bound") is True
                or ("value" in r and r["value"] is not None)
                or "x_size" in r
            )
            n_ok += bool(ok)
        summary[c] = (n_ok, n_run)
    csv_path = args.out + ".csv"
    with open(csv_path, "w", newline="") as fh:
        wtr = csv.writer(fh)
        wtr.writerow(["check", "successes", "runs", "frequency"])
        for c in checks:
            ok, run = summary[c]
            wtr.writerow([c, ok, run, (ok / run) if run else ""])
    print(f"wrote {nd_path} and {csv_path}")
    return EXIT_INCONCLUSIVE if inconclusive else EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="regfree")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a layered random graph")
    p.add_argument("--sizes", help="comma-separated layer sizes, e.g. 8,4,2")
    p.add_argument("--paper-n", help="asymptotic sizing, e.g. e^e^10")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("detect-regular", help="exact k-regular subgraph search")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out")
    p.set_defaults(func=cmd_detect_regular)

    p = sub.add_parser("certify", help="prefix density certificate")
    p.add_argument("--k", type=int, required=True, choices=(3, 4))
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--threshold", default="11/10")
    p.add_argument("--out")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("chif", help="fractional chromatic number")
    p.add_argument("--in", dest="infile", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--lower-bound", action="store_true")
    p.add_argument("--weights", choices=("paper", "unit"), default="paper")
    p.add_argument("--column-limit", type=int, default=10_000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_chif)

    p = sub.add_parser("degeneracy", help="degeneracy and witnessing ordering")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_degeneracy)

    p = sub.add_parser("subsample", help="triangle-free subsampling trials")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--p", required=True, help="inclusion probability, e.g. 1/4")
    p.add_argument("--threshold", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_subsample)

    p = sub.add_parser("bounds", help="replay inequality chains")
    bsub = p.add_subparsers(dest="which", required=True)
    for which in ("reg", "frac", "union"):
        bp = bsub.add_parser(which)
        bp.add_argument("--n", required=True, help="e.g. e^e^40")
        if which in ("reg", "frac"):
            bp.add_argument("--i", type=int, required=True)
        if which == "reg":
            bp.add_argument("--x", type=int, required=True)
        if which == "frac":
            bp.add_argument("--p-i", dest="p_i", required=True)
        bp.add_argument("--out")
        bp.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", help="seed-sweep experiments")
    p.add_argument("--sizes", required=True)
    p.add_argument("--seeds", required=True, help="range lo:hi (hi exclusive)")
    p.add_argument("--checks", help=f"subset of {','.join(ALL_CHECKS)}")
    p.add_argument("--out", required=True, help="output path prefix")
    p.set_defaults(func=cmd_sweep)

    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
