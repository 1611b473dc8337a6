"""Structural multiplier netlists built from block covers, concatenations and adders."""
from __future__ import annotations

import dataclasses
import graphlib
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .compose import BlockShape, MulPlan, PartialTerm, block_requirements
from .minimize import Cover, check_equivalence
from .reduce import AdderTreePlan, PreAdd
from .tables import block_truth_table


class NetlistError(ValueError):
    pass


@dataclass(frozen=True)
class BlockInstance:
    net: str
    shape: BlockShape
    i: int
    j: int
    a_lsb: int
    b_lsb: int

    @property
    def width(self) -> int:
        return self.shape[2]


@dataclass(frozen=True)
class PreAddNode:
    net: str
    left: str
    right: str
    width: int


@dataclass(frozen=True)
class ConcatNode:
    """Parts are ``(net, width)`` from least significant up; ``net=None`` is zero fill."""

    net: str
    parts: tuple[tuple[str | None, int], ...]

    @property
    def width(self) -> int:
        return sum(w for _, w in self.parts)


@dataclass(frozen=True)
class AdderNode:
    net: str
    level: int
    left: str
    right: str
    width: int


@dataclass(frozen=True, eq=False)
class Netlist:
    name: str
    plan: MulPlan
    covers: Mapping[BlockShape, Cover]
    blocks: tuple[BlockInstance, ...]
    pre_adds: tuple[PreAddNode, ...]
    concats: tuple[ConcatNode, ...]
    adders: tuple[AdderNode, ...]
    output: str

    @property
    def width_a(self) -> int:
        return self.plan.n

    @property
    def width_b(self) -> int:
        return self.plan.n

    @property
    def width_r(self) -> int:
        return self.plan.output_width

    def nodes(self):
        return (*self.blocks, *self.pre_adds, *self.concats, *self.adders)

    def net_widths(self) -> dict[str, int]:
        widths = {"a": self.width_a, "b": self.width_b}
        for node in self.nodes():
            widths[node.net] = node.width
        return widths

    def replace_cover(self, shape: BlockShape, cover: Cover) -> "Netlist":
        """Copy with one block definition swapped (no equivalence check)."""
        covers = dict(self.covers)
        covers[shape] = cover
        return dataclasses.replace(self, covers=covers)

    @property
    def depth(self) -> int:
        return max((a.level for a in self.adders), default=0)


def _mask(width: int) -> int:
    return (1 << width) - 1


def lower(plan: MulPlan, tree: AdderTreePlan, covers: Mapping[BlockShape, Cover],
          check: bool = True) -> Netlist:
    """Build the netlist for ``plan`` laid out as ``tree``.

    ``covers`` maps each block shape to its cover.  With ``check`` set every
    cover is verified exhaustively against its block truth table first.
    """
    used = {}
    for shape in sorted(block_requirements(plan)):
        if shape not in covers:
            raise NetlistError(f"no cover for block shape {shape}")
        c = covers[shape]
        w_a, w_b, out_w = shape
        if (c.n_in, c.n_out) != (w_a + w_b, out_w):
            raise NetlistError(f"cover for {shape} has arity {c.n_in}->{c.n_out}")
        if check and not check_equivalence(c, block_truth_table(w_a, w_b, out_w)):
            raise NetlistError(f"cover for {shape} does not implement the block")
        used[shape] = c

    offsets = plan.split.offsets
    net_of: dict[PartialTerm, str] = {}
    blocks = []
    for t in plan.terms:
        net = f"pp_{t.label}"
        net_of[t] = net
        blocks.append(BlockInstance(net, t.shape, t.i, t.j, offsets[t.i - 1], offsets[t.j - 1]))

    pre_nodes = []
    for pa in tree.pre_adds:
        net = f"pa_{pa.label}"
        net_of[pa] = net
        pre_nodes.append(PreAddNode(net, net_of[pa.left], net_of[pa.right], pa.eff_width))

    concats = []
    for idx, s in enumerate(tree.summands):
        parts, pos = [], 0
        for src, off in s.segments:
            if off > pos:
                parts.append((None, off - pos))
            parts.append((net_of[src], src.eff_width))
            pos = off + src.eff_width
        concats.append(ConcatNode(f"s{idx}", tuple(parts)))

    adders = []
    level_nets = [(c.net, c.width) for c in concats]
    level = 0
    while len(level_nets) > 1:
        level += 1
        nxt = []
        for pos in range(0, len(level_nets) - 1, 2):
            (ln, lw), (rn, rw) = level_nets[pos], level_nets[pos + 1]
            width = min(plan.output_width, max(lw, rw) + 1)
            node = AdderNode(f"add_{level}_{pos // 2}", level, ln, rn, width)
            adders.append(node)
            nxt.append((node.net, width))
        if len(level_nets) % 2:
            nxt.append(level_nets[-1])
        level_nets = nxt

    return Netlist(plan.name, plan, used, tuple(blocks), tuple(pre_nodes),
                   tuple(concats), tuple(adders), level_nets[0][0])


def check_structure(nl: Netlist) -> None:
    """Raise ``NetlistError`` unless every net has one driver and there are no cycles."""
    drivers: dict[str, int] = {"a": 1, "b": 1}
    deps: dict[str, set[str]] = {"a": set(), "b": set()}
    for node in nl.nodes():
        drivers[node.net] = drivers.get(node.net, 0) + 1
        if isinstance(node, BlockInstance):
            deps[node.net] = {"a", "b"}
        elif isinstance(node, ConcatNode):
            deps[node.net] = {p for p, _ in node.parts if p is not None}
        else:
            deps[node.net] = {node.left, node.right}
    multi = [net for net, count in drivers.items() if count != 1]
    if multi:
        raise NetlistError(f"nets with multiple drivers: {multi}")
    for net, srcs in deps.items():
        missing = srcs - drivers.keys()
        if missing:
            raise NetlistError(f"{net} reads undriven nets {sorted(missing)}")
    if nl.output not in drivers:
        raise NetlistError("output is undriven")
    try:
        tuple(graphlib.TopologicalSorter(deps).static_order())
    except graphlib.CycleError as exc:
        raise NetlistError(f"combinational cycle: {exc.args[1]}") from None
    widths = nl.net_widths()
    for node in nl.pre_adds + nl.adders:
        if node.width > max(widths[node.left], widths[node.right]) + 1:
            raise NetlistError(f"adder {node.net} wider than its operands need")


def _operand_check(nl: Netlist, a, b) -> None:
    if np.any(np.asarray(a) < 0) or np.any(np.asarray(b) < 0) \
            or np.any(np.asarray(a) >> nl.width_a) or np.any(np.asarray(b) >> nl.width_b):
        raise ValueError(f"operands must be in 0..2**{nl.width_a}-1")


def evaluate(nl: Netlist, a: int, b: int) -> int:
    """Value of ``r`` for one input pair, evaluating each block's SOP cover."""
    a, b = int(a), int(b)
    _operand_check(nl, a, b)
    vals: dict[str, int] = {}
    for blk in nl.blocks:
        w_a, w_b, _ = blk.shape
        x = ((a >> blk.a_lsb) & _mask(w_a)) | (((b >> blk.b_lsb) & _mask(w_b)) << w_a)
        vals[blk.net] = nl.covers[blk.shape].evaluate(x)
    for pa in nl.pre_adds:
        vals[pa.net] = (vals[pa.left] + vals[pa.right]) & _mask(pa.width)
    for c in nl.concats:
        v = pos = 0
        for net, w in c.parts:
            if net is not None:
                v |= vals[net] << pos
            pos += w
        vals[c.net] = v
    for ad in nl.adders:
        vals[ad.net] = (vals[ad.left] + vals[ad.right]) & _mask(ad.width)
    return vals[nl.output] & _mask(nl.width_r)


def evaluate_many(nl: Netlist, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Vectorized ``evaluate`` over ``uint64`` operand arrays.

    Blocks are read from the truth table of their cover; results never exceed
    64 bits for operands up to 32 bits.
    """
    a = np.asarray(a, dtype=np.uint64)
    b = np.asarray(b, dtype=np.uint64)
    _operand_check(nl, a, b)
    u = np.uint64
    vals: dict[str, np.ndarray] = {}
    for blk in nl.blocks:
        w_a, w_b, _ = blk.shape
        x = ((a >> u(blk.a_lsb)) & u(_mask(w_a))) | (((b >> u(blk.b_lsb)) & u(_mask(w_b))) << u(w_a))
        vals[blk.net] = nl.covers[blk.shape].truth_table[x.astype(np.int64)]
    for pa in nl.pre_adds:
        vals[pa.net] = (vals[pa.left] + vals[pa.right]) & u(_mask(pa.width))
    for c in nl.concats:
        v = np.zeros_like(a)
        pos = 0
        for net, w in c.parts:
            if net is not None:
                v |= vals[net] << u(pos)
            pos += w
        vals[c.net] = v
    for ad in nl.adders:
        vals[ad.net] = (vals[ad.left] + vals[ad.right]) & u(_mask(ad.width))
    return vals[nl.output] & u(_mask(nl.width_r))
