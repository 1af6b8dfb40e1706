"""Command-line interface.

Subcommands: analyze, weights, verify, construct, pipeline, sweep,
export-dot.  Reports go to stdout as aligned text or, with --json, as one
JSON object per line in the fixed record schema; diagnostics go to
stderr.  Exit codes: 0 success, 1 enumeration refused by the cost guard,
2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from .analysis import BoundsTable, check_self_dual, classify, weight_enumerator
from .circulant import (
    candidate_vector,
    dense_family_vector,
    expand_generator_matrix,
    parse_generator_vector,
    to_dot,
    validate_circulant_symmetry,
)
from .errors import Circ4Error, CostGuardError
from .search import ReportRecord, analyze_vector, candidate_pipeline, sweep_symmetric


def _load_bounds(path: Optional[str]) -> BoundsTable:
    base = BoundsTable.default()
    return BoundsTable.from_file(path, base=base) if path else base


def _emit_record(rec: ReportRecord, as_json: bool) -> None:
    if as_json:
        print(json.dumps(rec.to_json_dict()))
        return
    d = rec.to_json_dict()
    width = max(len(k) for k in d)
    for key, value in d.items():
        if key == "enumerator" and value is not None:
            value = " ".join(str(x) for x in value)
        print(f"{key:<{width}}  {value}")
    print()


def _cmd_analyze(args) -> int:
    bounds = _load_bounds(args.bounds)
    rec = analyze_vector(
        args.vector,
        bounds=bounds,
        with_enumerator=args.enumerator,
        allow_large=args.allow_large,
        cap=args.cap,
    )
    _emit_record(rec, args.json)
    return 0


def _cmd_weights(args) -> int:
    gv = parse_generator_vector(args.vector)
    t0 = time.perf_counter()
    code = expand_generator_matrix(gv)
    enum = weight_enumerator(code, allow_large=args.allow_large)
    duality = check_self_dual(code)
    elapsed = round((time.perf_counter() - t0) * 1000.0, 3)
    rec = ReportRecord(
        n=gv.n,
        vector=gv.text(),
        d=enum.min_positive_weight,
        proof_complete=True,
        self_dual=duality.self_dual,
        classification=classify(enum.min_positive_weight, gv.n, _load_bounds(None)),
        enumerator=enum.counts,
        strategy="weights",
        elapsed_ms=elapsed,
    )
    _emit_record(rec, args.json)
    return 0


def _cmd_verify(args) -> int:
    gv = parse_generator_vector(args.vector)
    report = check_self_dual(expand_generator_matrix(gv))
    if args.json:
        print(
            json.dumps(
                {
                    "n": gv.n,
                    "vector": gv.text(),
                    "self_orthogonal": report.self_orthogonal,
                    "independent_rows": report.independent_rows,
                    "self_dual": report.self_dual,
                    "first_violation": list(report.first_violation)
                    if report.first_violation
                    else None,
                }
            )
        )
    else:
        print(f"n                 {gv.n}")
        print(f"vector            {gv.text()}")
        print(f"self_orthogonal   {report.self_orthogonal}")
        print(f"independent_rows  {report.independent_rows}")
        print(f"self_dual         {report.self_dual}")
        if report.first_violation:
            i, j = report.first_violation
            print(f"first_violation   rows {i}, {j}")
    return 0


def _cmd_construct(args) -> int:
    if args.dense:
        if args.target is not None or args.mode is not None:
            raise ValueError("--dense takes no target/mode")
        gv = dense_family_vector(args.n)
    else:
        if args.target is None or args.mode is None:
            raise ValueError("construct needs L and MODE, or --dense")
        gv = candidate_vector(args.n, args.target, args.mode)
    print(gv.text())
    return 0


def _cmd_pipeline(args) -> int:
    bounds = _load_bounds(args.bounds)
    for rec in candidate_pipeline(args.n, bounds):
        _emit_record(rec, args.json)
    return 0


def _cmd_sweep(args) -> int:
    bounds = _load_bounds(args.bounds)
    records = sweep_symmetric(
        args.n, budget=args.budget, seed=args.seed, target=args.target, bounds=bounds
    )
    for rec in records:
        _emit_record(rec, args.json)
    return 0


def _cmd_export_dot(args) -> int:
    gv = parse_generator_vector(args.vector)
    bad = validate_circulant_symmetry(gv)
    if bad is not None:
        raise Circ4Error(f"adjacency bits at offsets {bad[0]} and {bad[1]} differ")
    sys.stdout.write(to_dot(gv))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="circ4",
        description="Additive GF(4) codes from circulant graphs: construct, analyze, search.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="distance, duality and classification of a vector")
    a.add_argument("vector")
    a.add_argument("--enumerator", action="store_true", help="include the weight enumerator")
    a.add_argument("--cap", type=int, default=None, help="largest subset size to search")
    a.add_argument("--allow-large", action="store_true", help="lift the 2^34 enumeration guard")
    a.add_argument("--bounds", metavar="FILE", help="bounds override file (lines: n L [U])")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=_cmd_analyze)

    w = sub.add_parser("weights", help="full weight enumerator of a vector")
    w.add_argument("vector")
    w.add_argument("--allow-large", action="store_true")
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=_cmd_weights)

    v = sub.add_parser("verify", help="self-duality report for a vector")
    v.add_argument("vector")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=_cmd_verify)

    c = sub.add_parser("construct", help="emit a candidate or dense-family vector")
    c.add_argument("n", type=int)
    c.add_argument("target", type=int, nargs="?", default=None, metavar="L")
    c.add_argument("mode", nargs="?", default=None, choices=("plus", "minus"))
    c.add_argument("--dense", action="store_true", help="dense family instead of candidates")
    c.set_defaults(func=_cmd_construct)

    pl = sub.add_parser("pipeline", help="construct and analyze both candidates for n")
    pl.add_argument("n", type=int)
    pl.add_argument("--bounds", metavar="FILE")
    pl.add_argument("--json", action="store_true")
    pl.set_defaults(func=_cmd_pipeline)

    s = sub.add_parser("sweep", help="search symmetric vectors of length n")
    s.add_argument("n", type=int)
    s.add_argument("--budget", type=int, default=4096, help="max vectors to analyze")
    s.add_argument("--seed", type=int, default=0, help="sampling seed when space > budget")
    s.add_argument("--target", type=int, default=None, help="screen out codes below this distance")
    s.add_argument("--bounds", metavar="FILE")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=_cmd_sweep)

    e = sub.add_parser("export-dot", help="DOT graph of a vector's circulant graph")
    e.add_argument("vector")
    e.set_defaults(func=_cmd_export_dot)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CostGuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1
    except (Circ4Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
