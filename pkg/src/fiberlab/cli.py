"""Command-line surface.

    fiberlab invariants <file> [flags]
    fiberlab check <predicate> <file> [flags]
    fiberlab reproduce [id|all] [flags]

Reports are JSON with sorted keys (byte-deterministic for fixed input,
seeds and field); human tables via --markdown.  Exit codes: 0 success or
true, 1 mismatch or false, 2 input error, 3 computation bound exceeded,
4 unknown verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import corpus as corpus_mod
from .blowup import fiber_presentation, minimal_reduction, rees_and_gr
from .fields import FieldError
from .ideals import Ideal
from .parse import ParseError, parse_ideal_file
from .polyring import RingError
from .predicates import (analytically_adjusted, check_gs, fiber_indeg,
                         generic_forms, generically_ci, is_perfect,
                         map_degree_via_formula, multiplicity_formula_checks,
                         tight_profile, user_forms, valabrega_valla,
                         valla_dimension)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_BOUND = 3
EXIT_UNKNOWN = 4

CHECK_NAMES = ("gs", "valla-dim", "indeg", "tight", "adjusted", "vv",
               "reg-in-gr", "gen-ci", "perfect", "mult-formulas", "map-degree")


def _common_flags(p):
    p.add_argument("--field", type=int, default=None,
                   help="override the characteristic (0 for the rationals)")
    p.add_argument("--seed", type=str, default="1,2,3",
                   help="comma-separated seed list")
    p.add_argument("--nmax", type=int, default=None, help="power bound for per-n checks")
    p.add_argument("--cutoff", type=int, default=corpus_mod.DEFAULT_CUTOFF_CEILING,
                   help="resolution degree ceiling")
    p.add_argument("--trials", type=int, default=corpus_mod.DEFAULT_TRIALS,
                   help="CM test trials")
    p.add_argument("--rmax", type=int, default=corpus_mod.DEFAULT_RMAX,
                   help="reduction-number search bound")
    p.add_argument("--markdown", action="store_true", help="render a human table")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock timing in the report")


def build_parser():
    ap = argparse.ArgumentParser(prog="fiberlab")
    sub = ap.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="blow-up invariants of an ideal file")
    p_inv.add_argument("file")
    _common_flags(p_inv)

    p_chk = sub.add_parser("check", help="run one named predicate")
    p_chk.add_argument("predicate", choices=CHECK_NAMES)
    p_chk.add_argument("file")
    p_chk.add_argument("--s", type=int, default=3, help="s for the gs predicate")
    p_chk.add_argument("--n", type=int, default=1, help="power for tight")
    p_chk.add_argument("--l", type=int, default=None, help="forms for adjusted")
    _common_flags(p_chk)

    p_rep = sub.add_parser("reproduce", help="rerun corpus entries against goldens")
    p_rep.add_argument("target", nargs="?", default="all")
    p_rep.add_argument("--jobs", type=int, default=1)
    _common_flags(p_rep)
    return ap


def _emit(tree: dict, markdown: bool):
    if markdown:
        _render_markdown(tree)
    else:
        print(json.dumps(tree, sort_keys=True, indent=2, default=str))


def _render_markdown(tree, prefix=""):
    if prefix == "":
        print("| key | value |")
        print("| --- | --- |")
    for k in sorted(tree):
        v = tree[k]
        name = f"{prefix}{k}"
        if isinstance(v, dict):
            _render_markdown(v, name + ".")
        else:
            print(f"| {name} | {v} |")


def _load_ideal(path: str, field_char):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    ring, gens = parse_ideal_file(text, characteristic_override=field_char)
    return Ideal(ring, tuple(gens))


def _seeds(args):
    return [int(s) for s in args.seed.split(",") if s.strip()]


def cmd_invariants(args) -> int:
    ideal = _load_ideal(args.file, args.field)
    report = _ideal_report(ideal, args)
    _emit(report, args.markdown)
    return EXIT_BOUND if report.get("skipped") else EXIT_OK


def _ideal_report(ideal, args) -> dict:
    """Invariants for an arbitrary input file (general-purpose variant of
    the corpus pipeline)."""
    t0 = time.time()
    from .graded import linear_rank
    from .resolutions import minimal_resolution
    report = {"field": ideal.ring.field.characteristic,
              "seeds": _seeds(args),
              "bounds": {"r_max": args.rmax, "trials": args.trials,
                         "cutoff_ceiling": args.cutoff},
              "invariants": {}, "skipped": {}}
    inv = report["invariants"]
    mingens = ideal.minimal_generators()
    inv["mu"] = len(mingens)
    degrees = sorted({g.homogeneous_degree() for g in mingens})
    inv["generator_degrees"] = degrees
    inv["dim"] = ideal.krull_dimension()
    inv["height"] = ideal.height()
    inv["multiplicity"] = ideal.multiplicity()
    equigen = len(degrees) == 1
    inv["degree"] = degrees[0] if equigen else None
    res = minimal_resolution(ideal, ceiling=args.cutoff)
    if res.table.complete:
        inv["pd"] = res.table.projective_dimension
        inv["depth_quotient"] = ideal.ring.nvars - res.table.projective_dimension
        inv["regularity_quotient"] = res.table.regularity()
        inv["betti"] = res.table.rows()
        if equigen:
            inv["linear_rank"] = linear_rank(res.presentation, ideal.ring.field)
    else:
        report["skipped"]["resolution"] = f"incomplete at cutoff {res.table.cutoff}"
    if equigen:
        fp = fiber_presentation(ideal)
        inv["analytic_spread"] = fp.analytic_spread()
        inv["fiber_multiplicity"] = fp.multiplicity()
        indeg = fiber_indeg(ideal, fp=fp)
        inv["indeg_Q"] = indeg.certificate["indeg"]
        red = minimal_reduction(ideal, seed=f"red:{_seeds(args)[0]}",
                                r_max=args.rmax, fp=fp)
        inv["reduction_number"] = red.reduction_number
        inv["reduction_verified"] = red.verified
        from .blowup import is_cm_graded
        fiber_cm = is_cm_graded((fp.fiber_ring, fp.relations), trials=args.trials)
        inv["fiber_cm"] = fiber_cm.verdict
        pres = rees_and_gr(ideal, fp)
        rees_cm = is_cm_graded((pres.big_ring, pres.rees_ideal), trials=args.trials)
        inv["rees_cm"] = rees_cm.verdict
    else:
        report["skipped"]["blowup"] = "ideal is not equigenerated"
    if args.timings:
        report["timing_seconds"] = round(time.time() - t0, 3)
    else:
        print(f"elapsed {time.time() - t0:.2f}s", file=sys.stderr)
    return report


def cmd_check(args) -> int:
    ideal = _load_ideal(args.file, args.field)
    seeds = _seeds(args)
    nmax = args.nmax or corpus_mod.DEFAULT_NMAX_FLOOR
    name = args.predicate
    if name == "gs":
        rep = check_gs(ideal, args.s)
    elif name == "valla-dim":
        rep = valla_dimension(ideal)
    elif name == "indeg":
        rep = fiber_indeg(ideal)
    elif name == "perfect":
        rep = is_perfect(ideal)
    elif name == "gen-ci":
        rep = generically_ci(ideal)
    elif name == "mult-formulas":
        rep = multiplicity_formula_checks(ideal)
    elif name == "map-degree":
        rep = map_degree_via_formula(ideal)
    elif name in ("tight", "adjusted", "vv", "reg-in-gr"):
        fp = fiber_presentation(ideal)
        spread = fp.analytic_spread()
        if name == "tight":
            fs = generic_forms(ideal, spread, f"forms:{seeds[0]}")
            if args.n == 0:
                rep = tight_profile(ideal, fs, nmax)
            else:
                from .predicates import analytically_tight
                rep = analytically_tight(ideal, fs, args.n)
        elif name == "adjusted":
            count = args.l or spread
            fs = generic_forms(ideal, count, f"forms:{seeds[0]}")
            rep = analytically_adjusted(ideal, fs)
        else:
            g = ideal.height()
            fs = generic_forms(ideal, g, f"forms:{seeds[0]}")
            rep = valabrega_valla(ideal, fs, nmax)
            if name == "reg-in-gr":
                from .predicates import PredicateReport
                rep = PredicateReport("reg-in-gr", rep.inputs, rep.verdict,
                                      rep.bounds_used, rep.certificate)
    else:
        raise SystemExit(f"unknown predicate {name}")
    _emit(rep.to_json(), args.markdown)
    if rep.verdict == "true":
        return EXIT_OK
    if rep.verdict == "false":
        return EXIT_FALSE
    return EXIT_UNKNOWN


def cmd_reproduce(args) -> int:
    targets = [e.id for e in corpus_mod.CORPUS] if args.target == "all" \
        else [args.target]
    for t in targets:
        if t not in corpus_mod.CORPUS_BY_ID:
            print(f"unknown corpus id {t!r}", file=sys.stderr)
            return EXIT_INPUT
    seeds = _seeds(args)
    results = {}
    t0 = time.time()
    if args.jobs > 1 and len(targets) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futs = {t: pool.submit(_reproduce_one, t, args.field, tuple(seeds),
                                   args.nmax, args.trials, args.rmax, args.cutoff)
                    for t in targets}
            for t in targets:
                results[t] = futs[t].result()
    else:
        for t in targets:
            results[t] = _reproduce_one(t, args.field, tuple(seeds), args.nmax,
                                        args.trials, args.rmax, args.cutoff)
    any_diff = False
    out = {}
    for t in targets:
        diffs, report = results[t]
        out[t] = {"diffs": diffs, "ok": not diffs}
        if diffs:
            any_diff = True
    _emit(out, args.markdown)
    print(f"reproduce elapsed {time.time() - t0:.1f}s", file=sys.stderr)
    return EXIT_FALSE if any_diff else EXIT_OK


def _reproduce_one(entry_id, field, seeds, nmax, trials, rmax, cutoff):
    entry = corpus_mod.CORPUS_BY_ID[entry_id]
    report = corpus_mod.compute_entry(entry_id, field, seeds, nmax, trials,
                                      rmax, cutoff)
    report = corpus_mod.strip_objects(report)
    golden = corpus_mod.load_golden(entry)
    diffs = corpus_mod.compare_with_golden(report, golden)
    return diffs, report


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "invariants":
            return cmd_invariants(args)
        if args.command == "check":
            return cmd_check(args)
        if args.command == "reproduce":
            return cmd_reproduce(args)
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FieldError, RingError, FileNotFoundError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
