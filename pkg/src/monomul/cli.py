"""Command-line driver: ``monomul gen|verify|tables``.

Exit codes: 0 success, 1 pipeline error or verification mismatch, 2 usage error.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .compose import MAX_GROUP, MAX_OPERAND, MIN_GROUP, default_group_width, plan_partial_products, block_requirements
from .emit import block_module_name, stats_for, write_pla, write_stats, write_verilog
from .minimize import EXACT_MAX_INPUTS, METHODS
from .pipeline import build
from .verify import EXHAUSTIVE_MAX_INPUT_BITS, VerifyConfig, reproduce_tables, run_verify

OUT_ENV = "MONOMUL_OUT"
FORMATS = ("pla", "verilog", "json", "csv")


def _design_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="operand width in bits")
    p.add_argument("--m", type=int, help="group width (default 5 if it divides n, else 4)")
    p.add_argument("--mode", choices=("full", "lowhalf"), default="full")
    p.add_argument("--minimizer", choices=METHODS, default="auto")
    p.add_argument("--pre-adds", action="store_true", help="merge equal-shift single terms")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monomul", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a multiplier")
    _design_args(gen)
    gen.add_argument("--out", type=Path, help=f"output directory (default ${OUT_ENV} or .)")
    gen.add_argument("--format", action="append", choices=FORMATS, dest="formats",
                     help="repeatable; default verilog")

    ver = sub.add_parser("verify", help="check a generated multiplier against a*b")
    _design_args(ver)
    ver.add_argument("--exhaustive", action="store_true")
    ver.add_argument("--trials", type=int, default=10**6)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--no-boundary", action="store_true")
    ver.add_argument("--workers", type=int, default=1)

    tab = sub.add_parser("tables", help="reproduce reference block and adder counts")
    tab.add_argument("--rows", action="append", help="restrict to e.g. 14x14 (repeatable)")
    tab.add_argument("--no-minimized", action="store_true", help="skip block minimization")
    tab.add_argument("--json", action="store_true", help="print the diff as JSON")
    return parser


def _validate(parser, args) -> None:
    if args.command == "tables":
        return
    if not MIN_GROUP <= args.n <= MAX_OPERAND:
        parser.error(f"--n must be in {MIN_GROUP}..{MAX_OPERAND}")
    if args.m is None:
        args.m = default_group_width(args.n)
    if not MIN_GROUP <= args.m <= MAX_GROUP or args.m > args.n:
        parser.error(f"--m must be in {MIN_GROUP}..{MAX_GROUP} and at most --n")
    if args.minimizer == "exact":
        plan = plan_partial_products(args.n, args.m, args.mode)
        wide = [s for s in block_requirements(plan) if s[0] + s[1] > EXACT_MAX_INPUTS]
        if wide:
            parser.error(f"--minimizer exact supports blocks up to {EXACT_MAX_INPUTS} inputs")
    if args.command == "verify":
        if args.exhaustive and 2 * args.n > EXHAUSTIVE_MAX_INPUT_BITS:
            parser.error(f"--exhaustive needs 2n <= {EXHAUSTIVE_MAX_INPUT_BITS}")
        if args.trials < 0 or args.workers < 1:
            parser.error("--trials must be >= 0 and --workers >= 1")


def cmd_gen(args) -> int:
    out = args.out or Path(os.environ.get(OUT_ENV, "."))
    formats = args.formats or ["verilog"]
    design = build(args.n, args.m, args.mode, args.minimizer, args.pre_adds)
    nl = design.netlist
    out.mkdir(parents=True, exist_ok=True)
    written = []
    if "verilog" in formats:
        written.append(out / f"{nl.name}.v")
        written[-1].write_text(write_verilog(nl))
    if "pla" in formats:
        for shape, cover in sorted(design.covers.items()):
            written.append(out / f"{block_module_name(shape)}.pla")
            written[-1].write_text(write_pla(cover))
    report = stats_for(design)
    written.append(out / f"{nl.name}.stats.json")
    written[-1].write_text(write_stats([report]))
    if "csv" in formats:
        written.append(out / f"{nl.name}.stats.csv")
        written[-1].write_text(write_stats([report], "csv"))
    for path in written:
        print(path)
    print(f"{nl.name}: {len(nl.blocks)} blocks, {len(design.covers)} shapes, "
          f"{report.reduced_adders} adders (common case {report.common_adders}), "
          f"depth {report.tree_depth}")
    return 0


def cmd_verify(args) -> int:
    design = build(args.n, args.m, args.mode, args.minimizer, args.pre_adds)
    cfg = VerifyConfig(args.n, args.m, args.mode,
                       "exhaustive" if args.exhaustive else "random",
                       args.trials, args.seed, not args.no_boundary, args.workers)
    res = run_verify(design.netlist, cfg)
    print(f"{design.netlist.name}: {res.cases} cases, "
          f"{'pass' if res.passed else 'FAIL'}")
    for a, b, got, want in res.mismatches:
        print(f"  a={a} b={b} got={got} expected={want}")
    return 0 if res.passed else 1


def cmd_tables(args) -> int:
    _, diffs = reproduce_tables(args.rows, minimized=not args.no_minimized)
    if args.json:
        sys.stdout.write(write_stats(diffs))
        return 0
    for d in diffs:
        line = f"{d.status:<18} {d.table:<7} {d.mode:<8} {d.row:>2}x{d.row:<2} {d.column:<9} " \
               f"computed={d.computed:<7} published={d.published}"
        print(line + (f"  ({d.note})" if d.note else ""))
    counts = {}
    for d in diffs:
        counts[d.status] = counts.get(d.status, 0) + 1
    print(", ".join(f"{k}: {v}" for k, v in sorted(counts.items())))
    return 0


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        return {"gen": cmd_gen, "verify": cmd_verify, "tables": cmd_tables}[args.command](args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"monomul: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
