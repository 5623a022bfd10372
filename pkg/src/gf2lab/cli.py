"""Command-line front end.

Three subcommands:

* ``analyze`` -- measure one map (an exponent or a LUT file): differential
  uniformity, nonlinearity, Walsh extremum, flags; optional JSON report and
  CSV difference-table dump.
* ``verify`` -- run the derivation replays and split-coordinate checks and
  print a pass/fail table.
* ``catalog`` -- measure the built-in differentially-4 families and compare
  against their predicted properties.

Exit codes: 0 success, 1 verification/measurement mismatch, 2 usage or
input errors.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

from .catalog import catalog_table
from .field import FieldConstructionError, field_make
from .lutio import LutParseError, read_lut, write_lut
from .report import AnalysisReport, report_to_json
from .spectra import (FunctionTable, build_lut, ddt_rows,
                      differential_uniformity, walsh_spectrum)
from .theorems import run_all_checks

DESK_DEGREE = 16


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads for sweeps (results identical for any count)")
    p.add_argument("--deep", action="store_true",
                   help="allow long-running large-field sweeps")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gf2lab",
        description="Exact spectra and proof-step verification for maps on GF(2^n)")
    sub = ap.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="measure one map")
    src = pa.add_mutually_exclusive_group(required=True)
    src.add_argument("--exp", type=int, help="analyze the power map x^d")
    src.add_argument("--lut", help="analyze a lookup-table file")
    pa.add_argument("--n", type=int, help="field degree (required with --exp)")
    pa.add_argument("--poly", help="field modulus as hex (default: least irreducible)")
    pa.add_argument("--json", help="write the JSON report to this path")
    pa.add_argument("--ddt-csv", help="dump the full difference table as CSV")
    pa.add_argument("--write-lut", help="also write the analyzed map as a LUT file")
    _add_common(pa)

    pv = sub.add_parser("verify", help="replay the derivations and print a check table")
    pv.add_argument("--k", default="1,2,3",
                    help="comma-separated k values (field degree 4k); default 1,2,3")
    pv.add_argument("--samples", type=int, default=None,
                    help="random pairs per replay sweep (default: exhaustive for k<=2, 1000 above)")
    pv.add_argument("--all-gamma", action="store_true",
                    help="repeat the split-coordinate suite for every qualifying gamma")
    _add_common(pv)

    pc = sub.add_parser("catalog", help="measure the built-in families")
    pc.add_argument("--max-n", type=int, default=12, help="largest field degree")
    _add_common(pc)
    return ap


def _fail_usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _analyze(args) -> int:
    timings: dict[str, float] = {}
    if args.exp is not None:
        if args.n is None:
            return _fail_usage("--exp requires --n")
        if args.exp < 0:
            return _fail_usage("--exp must be non-negative")
        if args.n > DESK_DEGREE and not args.deep:
            return _fail_usage(
                f"degree {args.n} exceeds the desk-scale limit {DESK_DEGREE}; "
                "pass --deep to run anyway (sweeps grow as n * 4^n)")
        try:
            poly = int(args.poly, 16) if args.poly else None
            spec = field_make(args.n, poly)
        except (ValueError, FieldConstructionError) as e:
            return _fail_usage(str(e))
        t0 = time.perf_counter()
        table = build_lut(spec, args.exp)
        timings["build"] = (time.perf_counter() - t0) * 1e3
        kind, exponent, digest = "exponent", args.exp, None
    else:
        try:
            table, digest = read_lut(args.lut)
        except OSError as e:
            return _fail_usage(str(e))
        except (LutParseError, FieldConstructionError, ValueError) as e:
            return _fail_usage(f"{args.lut}: {e}")
        if table.spec.n > DESK_DEGREE and not args.deep:
            return _fail_usage(
                f"degree {table.spec.n} exceeds the desk-scale limit {DESK_DEGREE}; "
                "pass --deep to run anyway")
        kind, exponent = "lut", None
    s = table.spec

    t0 = time.perf_counter()
    if args.ddt_csv:
        delta = 0
        with open(args.ddt_csv, "w", newline="") as fh:
            wr = csv.writer(fh)
            for row in ddt_rows(table):
                delta = max(delta, int(row.counts.max()))
                wr.writerow(row.counts.tolist())
    else:
        delta, _ = differential_uniformity(
            table, threads=args.threads, want_table=False, deep=args.deep)
    timings["ddt"] = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    ws = walsh_spectrum(table, threads=args.threads, keep_table=False,
                        deep=args.deep)
    timings["walsh"] = (time.perf_counter() - t0) * 1e3

    import numpy as np
    nl = (1 << (s.n - 1)) - ws.max_abs // 2
    is_perm = bool(np.bincount(table.lut, minlength=s.size).all())
    if s.n % 2 == 1:
        v = 1 << ((s.n + 1) // 2)
        is_ab = set(ws.histogram) == {0, v, -v}
    else:
        is_ab = None
    rep = AnalysisReport(
        field_n=s.n, poly=s.poly, map_kind=kind, exponent=exponent,
        family=None, lut_sha256=digest, is_permutation=is_perm, delta=delta,
        nl=nl, walsh_max=ws.max_abs, lam=ws.histogram, is_apn=delta == 2,
        is_ab=is_ab, timings_ms=timings)
    rep.validate()

    if args.write_lut:
        write_lut(args.write_lut, table)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report_to_json(rep))

    desc = f"x^{exponent}" if kind == "exponent" else f"lut sha256 {digest[:16]}..."
    print(f"field GF(2^{s.n}), modulus {s.poly:#x}")
    print(f"map {desc}")
    print(f"permutation: {'yes' if is_perm else 'no'}")
    print(f"delta (differential uniformity): {delta}")
    print(f"nonlinearity: {nl}   walsh max: {ws.max_abs}")
    # the conventional even-degree candidates differ; print both next to the measurement
    half = s.n // 2
    if s.n % 2 == 0:
        print(f"even-degree reference points: 2^(n-1) - 2^(n/2) = {(1 << (s.n - 1)) - (1 << half)}, "
              f"2^(n-1) - 2^(n/2 - 1) = {(1 << (s.n - 1)) - (1 << (half - 1))}")
    ab = "n/a (even degree)" if is_ab is None else ("yes" if is_ab else "no")
    print(f"apn: {'yes' if delta == 2 else 'no'}   ab: {ab}")
    return 0


def _verify(args) -> int:
    try:
        ks = [int(tok) for tok in args.k.split(",") if tok.strip()]
    except ValueError:
        return _fail_usage(f"bad --k list: {args.k!r}")
    if not ks:
        return _fail_usage("empty --k list")
    try:
        reports = run_all_checks(ks, samples=args.samples,
                                 all_gamma=args.all_gamma, deep=args.deep,
                                 threads=args.threads)
    except ValueError as e:
        return _fail_usage(str(e))
    width = max(len(r.name) for r in reports)
    print(f"{'check':<{width}}  {'instances':>10}  {'failures':>8}")
    for r in reports:
        print(f"{r.name:<{width}}  {r.instances:>10}  {r.failures:>8}")
    bad = [r for r in reports if r.failures]
    if bad:
        first = next((r.first_failure for r in bad if r.first_failure), None)
        print(f"\nFAILED: {len(bad)} check(s); first counterexample: {first}")
        return 1
    print("\nall checks passed")
    return 0


def _catalog(args) -> int:
    try:
        entries = catalog_table(args.max_n, deep=args.deep, threads=args.threads)
    except ValueError as e:
        return _fail_usage(str(e))
    hdr = (f"{'family':<10} {'n':>3} {'d':>6} {'cond':>5} "
           f"{'delta':>6} {'nl':>6} {'perm':>5} {'pred':>12}")
    print(hdr)
    mismatches = 0
    for e in entries:
        summ = e.summary
        pred = "-"
        if e.conditions_met:
            ok = summ.delta == e.expected_delta and summ.is_permutation == e.expected_permutation
            pred = "ok" if ok else "MISMATCH"
            mismatches += 0 if ok else 1
        toks = f"{e.family.family:<10} {e.family.n:>3} {e.family.d:>6} "
        toks += f"{'yes' if e.conditions_met else 'no':>5} "
        toks += f"{summ.delta:>6} {summ.nl:>6} {'yes' if summ.is_permutation else 'no':>5} {pred:>12}"
        print(toks)
    return 1 if mismatches else 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        return _analyze(args)
    if args.command == "verify":
        return _verify(args)
    return _catalog(args)


if __name__ == "__main__":
    sys.exit(main())
