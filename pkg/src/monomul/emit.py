"""Text renderings: Berkeley PLA covers, Verilog netlists, JSON/CSV statistics."""
from __future__ import annotations

import csv
import dataclasses
import io
import json
from dataclasses import dataclass, field
from typing import Sequence

from .minimize import Cover, Cube, Provenance
from .netlist import Netlist


class PlaParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


# -- PLA ----------------------------------------------------------------------

def write_pla(c: Cover) -> str:
    """Berkeley PLA (type f).  Input column j is input bit j; output column t is output t."""
    lines = [f".i {c.n_in}", f".o {c.n_out}", f".p {len(c.cubes)}"]
    for cube in c.cubes:
        lines.append(f"{cube.literals(c.n_in)} {cube.output_string(c.n_out)}")
    lines.append(".e")
    return "\n".join(lines)


def read_pla(text: str, provenance: Provenance = Provenance.HEURISTIC) -> Cover:
    n_in = n_out = None
    cubes = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("."):
            key, *args = line.split()
            if key in (".i", ".o", ".p"):
                if len(args) != 1 or not args[0].isdigit():
                    raise PlaParseError(lineno, f"{key} needs one integer")
                if key == ".i":
                    n_in = int(args[0])
                elif key == ".o":
                    n_out = int(args[0])
            elif key == ".type":
                if args != ["f"]:
                    raise PlaParseError(lineno, "only type f is supported")
            elif key in (".e", ".end"):
                break
            else:
                raise PlaParseError(lineno, f"unsupported directive {key}")
            continue
        if n_in is None or n_out is None:
            raise PlaParseError(lineno, "cube before .i/.o")
        fields = line.split()
        if len(fields) == 1 and len(fields[0]) == n_in + n_out:
            fields = [fields[0][:n_in], fields[0][n_in:]]
        if len(fields) != 2:
            raise PlaParseError(lineno, "expected input and output parts")
        ins, outs = fields
        if len(ins) != n_in:
            raise PlaParseError(lineno, f"input part has {len(ins)} columns, expected {n_in}")
        if len(outs) != n_out:
            raise PlaParseError(lineno, f"output part has {len(outs)} columns, expected {n_out}")
        try:
            cube = Cube.from_strings(ins, outs)
        except ValueError as exc:
            raise PlaParseError(lineno, str(exc)) from None
        cubes.append(cube)
    if n_in is None or n_out is None:
        raise PlaParseError(0, "missing .i or .o")
    return Cover(n_in, n_out, cubes, provenance)


# -- Verilog ------------------------------------------------------------------

def block_module_name(shape) -> str:
    w_a, w_b, out_w = shape
    return f"mono_mul_{w_a}x{w_b}_{out_w}"


def _vec(width: int) -> str:
    return f"[{width - 1}:0] " if width > 1 else ""


def _literal(j: int, w_a: int, positive: bool) -> str:
    name = f"a[{j}]" if j < w_a else f"b[{j - w_a}]"
    return name if positive else f"~{name}"


def _block_module(shape, cover: Cover) -> list[str]:
    w_a, w_b, out_w = shape
    out = [f"module {block_module_name(shape)} (",
           f"    input  wire {_vec(w_a)}a,",
           f"    input  wire {_vec(w_b)}b,",
           f"    output wire {_vec(out_w)}r",
           ");"]
    for k, cube in enumerate(cover.cubes):
        lits = [_literal(j, w_a, bool((cube.value >> j) & 1))
                for j in range(cover.n_in) if (cube.care >> j) & 1]
        expr = " & ".join(lits) if lits else "1'b1"
        out.append(f"    wire p{k} = {expr};")
    for t in range(out_w):
        terms = [f"p{k}" for k, cube in enumerate(cover.cubes) if (cube.outputs >> t) & 1]
        target = f"r[{t}]" if out_w > 1 else "r"
        expr = " | ".join(terms) if terms else "1'b0"
        out.append(f"    assign {target} = {expr};")
    out.append("endmodule")
    return out


def _slice(name: str, lsb: int, width: int) -> str:
    return f"{name}[{lsb + width - 1}:{lsb}]" if width > 1 else f"{name}[{lsb}]"


def write_verilog(nl: Netlist) -> str:
    """Block modules, one per distinct shape, followed by the top module."""
    lines = [f"// {nl.name}: {nl.width_a}x{nl.width_b} -> {nl.width_r}", ""]
    for shape in sorted(nl.covers):
        lines += _block_module(shape, nl.covers[shape])
        lines.append("")
    widths = nl.net_widths()
    lines += [f"module {nl.name} (",
              f"    input  wire {_vec(nl.width_a)}a,",
              f"    input  wire {_vec(nl.width_b)}b,",
              f"    output wire {_vec(nl.width_r)}r",
              ");"]
    for blk in nl.blocks:
        w_a, w_b, _ = blk.shape
        lines.append(f"    wire {_vec(blk.width)}{blk.net};")
        lines.append(f"    {block_module_name(blk.shape)} u_{blk.net} "
                     f"(.a({_slice('a', blk.a_lsb, w_a)}), .b({_slice('b', blk.b_lsb, w_b)}), "
                     f".r({blk.net}));")
    for pa in nl.pre_adds:
        lines.append(f"    wire {_vec(pa.width)}{pa.net} = {pa.left} + {pa.right};")
    for c in nl.concats:
        parts = [net if net is not None else f"{w}'b0" for net, w in reversed(c.parts)]
        expr = parts[0] if len(parts) == 1 else "{" + ", ".join(parts) + "}"
        lines.append(f"    wire {_vec(c.width)}{c.net} = {expr};")
    for ad in nl.adders:
        lines.append(f"    wire {_vec(ad.width)}{ad.net} = {ad.left} + {ad.right};")
    out_w = widths[nl.output]
    if out_w < nl.width_r:
        lines.append(f"    assign r = {{{nl.width_r - out_w}'b0, {nl.output}}};")
    else:
        lines.append(f"    assign r = {nl.output};")
    lines += ["endmodule", ""]
    return "\n".join(lines)


# -- statistics -----------------------------------------------------------------

@dataclass(frozen=True)
class StatsReport:
    n: int
    m: int
    mode: str
    dnf_count: int
    minimized_count: dict = field(default_factory=dict)
    common_adders: int = 0
    reduced_adders: int = 0
    pre_adds: int = 0
    tree_depth: int = 0
    block_shapes: list = field(default_factory=list)


def stats_for(design) -> StatsReport:
    """Stats of a built design; block counts are summed over distinct shapes."""
    from .reduce import common_case_adders
    from .tables import block_truth_table, dnf_disjunction_count

    plan, tree = design.plan, design.tree
    shapes = sorted(design.covers)
    return StatsReport(
        n=plan.n, m=plan.m, mode=plan.mode.value,
        dnf_count=sum(dnf_disjunction_count(block_truth_table(*s)) for s in shapes),
        minimized_count={
            "cubes": sum(design.covers[s].cube_count for s in shapes),
            "disjunctions": sum(design.covers[s].disjunctions for s in shapes),
        },
        common_adders=common_case_adders(plan),
        reduced_adders=tree.adder_count,
        pre_adds=len(tree.pre_adds),
        tree_depth=tree.depth_levels,
        block_shapes=[list(s) for s in shapes],
    )


def _flatten(record: dict) -> dict:
    flat = {}
    for key, value in record.items():
        if isinstance(value, dict):
            for sub, v in value.items():
                flat[f"{key}_{sub}"] = v
        elif isinstance(value, list):
            flat[key] = ";".join(
                "x".join(map(str, v)) if isinstance(v, (list, tuple)) else str(v) for v in value)
        else:
            flat[key] = value
    return flat


def write_stats(reports: Sequence, fmt: str = "json") -> str:
    """Serialize dataclass records as a JSON array (default) or CSV."""
    records = [dataclasses.asdict(r) for r in reports]
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n" if records else "[]"
    if fmt == "csv":
        rows = [_flatten(r) for r in records]
        if not rows:
            return ""
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    raise ValueError(f"unknown stats format {fmt!r}")
