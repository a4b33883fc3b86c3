"""Command-line front end.

Subcommands::

    termsing invariants --type quotient --r 13 --a 5 [--k-max K] [--json]
    termsing oracle --r 3 --weights 1,1,1 [--k-max K] [--json]
    termsing verify [--r-max 12] [--k-max 4] [--surface] [--probe 3:1,1,1] [--csv PATH]
    termsing bounds fano-bound | index-check I | lemma32 ... | fujita ...

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys

from termsing import _kernels
from termsing.catalog import (
    CAr,
    CyclicQuotient,
    class_name,
    graded_dim,
    invariants,
    is_terminal_quotient,
    make_class,
)
from termsing.descent import descend
from termsing.fano import fano_volume_bound, index_divides_24fact, lemma32_bound
from termsing.fujita import FujitaInput, fujita_check, parse_rational
from termsing.oracle import (
    DEFAULT_MAX_K,
    DEFAULT_MAX_R,
    OracleGuardError,
    WeightedQuotientMonoid,
    order_filtration,
)
from termsing.verify import CSV_COLUMNS, parse_probe, probe, surface_sweep, sweep

TYPES = ["smooth", "cDV", "quotient", "cA/r", "cAx/4", "cAx/2", "cD/2", "cD/3", "cE/2"]


class UsageError(Exception):
    pass


def dumps(doc) -> str:
    """Canonical JSON: sorted keys, fixed indent, so output round-trips byte for byte."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def _frac(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def invariants_report(type_, r=None, a=None, k_max=None) -> dict:
    c = make_class(type_, r, a)
    inv = invariants(c)
    doc = {
        "query": {"type": type_, "r": r, "a": a, "k_max": k_max},
        "class": class_name(c),
        "index": inv.index,
        "mult": inv.mult,
        "embdim": inv.embdim,
        "theorem_applicable": inv.theorem_applicable,
    }
    if isinstance(c, (CyclicQuotient, CAr)):
        doc["descent"] = descend(c.r, c.a).as_dict()
    if k_max is not None:
        doc["graded_dims"] = [graded_dim(c, k) for k in range(k_max + 1)]
    return doc


def oracle_report(r, weights, k_max, max_r, max_k) -> dict:
    Q = WeightedQuotientMonoid(r, tuple(weights))
    table = order_filtration(Q, k_max, max_r=max_r, max_k=max_k)
    seq = list(table.counts)
    for _ in range(Q.dim - 1):
        seq = [y - x for x, y in zip(seq, seq[1:])]
    doc = {
        "query": {"r": r, "weights": list(Q.weights), "k_max": k_max},
        "kernel": _kernels.IMPL,
        "hilbert_basis": [list(h) for h in table.hilbert_basis],
        "embdim": table.embdim,
        "counts": list(table.counts),
        "mult_estimate": seq[-1] if seq else None,
        "stabilized": table.stabilized,
    }
    if Q.dim == 3 and r >= 2:
        doc["terminal_normal_form_a"] = is_terminal_quotient(r, Q.weights)
    return doc


def fujita_report(r, sigmas) -> dict:
    verdict = fujita_check(FujitaInput(r, tuple(parse_rational(s) for s in sigmas)))
    return {
        "query": {"r": r, "sigma": [_frac(s) for s in verdict.input.sigma]},
        "conditions": [
            {
                "p": c.p,
                "sigma": _frac(c.sigma),
                "sigma_power": _frac(c.sigma ** c.p),
                "threshold": _frac(c.threshold.power_minimum),
                "strict": c.threshold.strict,
                "holds": c.holds,
            }
            for c in verdict.conditions
        ],
        "passes": verdict.passes,
    }


def _print_invariants(doc):
    print(f"class:  {doc['class']}")
    print(f"index:  {doc['index']}")
    print(f"mult:   {doc['mult']}")
    print(f"embdim: {doc['embdim']}")
    if "descent" in doc:
        d = doc["descent"]
        print(f"descent rs={d['rs']} as={d['as']} floors={d['floors']}")
    if "graded_dims" in doc:
        print(f"graded dims: {doc['graded_dims']}")


def cmd_invariants(args) -> int:
    if args.k_max is not None and args.k_max < 0:
        raise UsageError("--k-max must be >= 0")
    try:
        doc = invariants_report(args.type, args.r, args.a, args.k_max)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(dumps(doc))
    else:
        _print_invariants(doc)
    return 0


def cmd_oracle(args) -> int:
    try:
        weights = [int(x) for x in args.weights.split(",")]
        max_r, max_k = _guards(args)
        doc = oracle_report(args.r, weights, args.k_max, max_r, max_k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(dumps(doc))
    else:
        print(f"kernel: {doc['kernel']}")
        print(f"hilbert basis ({doc['embdim']}): {doc['hilbert_basis']}")
        print(f"counts: {doc['counts']}")
        print(f"mult estimate: {doc['mult_estimate']} (stabilized: {doc['stabilized']})")
    return 0


def _guards(args):
    if getattr(args, "no_guard", False):
        return 10 ** 9, 10 ** 9
    return DEFAULT_MAX_R, DEFAULT_MAX_K


def cmd_verify(args) -> int:
    if args.r_max < 2:
        raise UsageError("--r-max must be >= 2")
    if args.k_max < 3:
        raise UsageError("--k-max must be >= 3")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    max_r, max_k = _guards(args)
    try:
        probes = [parse_probe(p) for p in args.probe]
        cells = sweep(args.r_max, args.k_max, args.jobs, max_r, max_k)
        surf = surface_sweep(args.r_max, args.k_max, args.jobs, max_r, max_k) if args.surface else []
        probed = [probe(r, w, args.k_max, max_r, max_k) for r, w in probes]
    except (ValueError, OracleGuardError) as exc:
        raise UsageError(str(exc)) from None

    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            for c in cells:
                writer.writerow(c.csv_row())

    mismatches = sum(not c.ok for c in cells) + sum(not c.ok for c in surf)
    mismatches += sum(p.mismatch for p in probed)
    if args.json:
        doc = {
            "query": {"r_max": args.r_max, "k_max": args.k_max, "surface": args.surface,
                      "probe": list(args.probe)},
            "cells": [c.as_dict() for c in cells],
            "surface_cells": [c.as_dict() for c in surf],
            "probes": [p.as_dict() for p in probed],
            "mismatches": mismatches,
            "status": "ok" if mismatches == 0 else "mismatch",
        }
        print(dumps(doc))
    else:
        print(",".join(CSV_COLUMNS))
        for c in cells:
            print(",".join(map(str, c.csv_row())))
        if surf:
            print("# surface cells (n, q)")
            for c in surf:
                print(",".join(map(str, c.csv_row())))
        for p in probed:
            print(
                f"probe Z_{p.r}{tuple(p.weights)}: mult_oracle {p.mult_oracle}, "
                f"embdim_oracle {p.embdim_oracle}, "
                f"formula_applicable {str(p.formula_applicable).lower()}"
            )
            if not p.formula_applicable:
                if p.embdim_below_mult_plus_2:
                    print(f"  embdim {p.embdim_oracle} < mult + 2 = {p.mult_oracle + 2}")
                if p.mult_exceeds_order_plus_2:
                    print(f"  mult {p.mult_oracle} > index + 2 = {p.r + 2}")
        total = len(cells) + len(surf)
        print(f"{mismatches} mismatches over {total} cells")
    return 0 if mismatches == 0 else 1


def cmd_bounds(args) -> int:
    try:
        if args.bound == "fano-bound":
            b = fano_volume_bound()
            doc = {"expression": b.expression, "value": str(b.value)}
            text = str(b)
        elif args.bound == "index-check":
            I = int(args.I)
            ok = index_divides_24fact(I)
            doc = {"I": str(I), "divides_24_factorial": ok}
            text = "true" if ok else "false"
        elif args.bound == "lemma32":
            v = lemma32_bound(args.n, args.r, args.d)
            doc = {"n": args.n, "r": str(args.r), "d": str(args.d), "bound": str(v)}
            text = str(v)
        else:
            doc = fujita_report(args.r, [args.sigma1, args.sigma2, args.sigma3])
            lines = []
            for c in doc["conditions"]:
                op = ">" if c["strict"] else ">="
                lhs = "sigma_1" if c["p"] == 1 else f"sigma_{c['p']}^{c['p']}"
                mark = "ok" if c["holds"] else "FAIL"
                lines.append(f"p={c['p']}: {lhs} = {c['sigma_power']} {op} {c['threshold']}: {mark}")
            lines.append("passes" if doc["passes"] else "fails")
            text = "\n".join(lines)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    print(dumps(doc) if args.json else text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="termsing", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariants of one singularity class")
    p.add_argument("--type", required=True, choices=TYPES)
    p.add_argument("--r", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("oracle", help="brute-force lattice oracle on C^d/Z_r(w)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--weights", required=True, help="comma separated, 2 or 3 entries")
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--no-guard", action="store_true", help="lift the r/K size guard")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="sweep the descent formula against the oracle")
    p.add_argument("--r-max", type=int, default=12)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--surface", action="store_true", help="include C^2/Z_n(q,1) cells")
    p.add_argument("--probe", action="append", default=[], metavar="R:W1,W2,W3")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-guard", action="store_true", help="lift the r/K size guard")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="Fano volume/index bounds and Fujita thresholds")
    p.add_argument("--json", action="store_true")
    bsub = p.add_subparsers(dest="bound", required=True)
    bsub.add_parser("fano-bound")
    q = bsub.add_parser("index-check")
    q.add_argument("I")
    q = bsub.add_parser("lemma32")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    q = bsub.add_parser("fujita")
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--sigma1", required=True)
    q.add_argument("--sigma2", required=True)
    q.add_argument("--sigma3", required=True)
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"termsing: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
