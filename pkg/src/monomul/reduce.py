"""Concatenation-based packing of partial products and the final adder tree."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .compose import MulPlan, PartialTerm
from .tables import ArithMode


@dataclass(frozen=True)
class PreAdd:
    """Sum of two equally shifted terms, formed before the tree."""

    left: PartialTerm
    right: PartialTerm
    shift: int
    eff_width: int

    @property
    def span(self) -> tuple[int, int]:
        return (self.shift, self.shift + self.eff_width)

    @property
    def label(self) -> str:
        return f"{self.left.label}__{self.right.label}"


Source = Union[PartialTerm, PreAdd]


@dataclass(frozen=True)
class Summand:
    """Non-overlapping sources joined into one vector; gaps are zero.

    Segments are ``(source, bit_offset)`` sorted by offset.
    """

    segments: tuple[tuple[Source, int], ...]
    width: int

    @property
    def top(self) -> int:
        return max(off + src.eff_width for src, off in self.segments)

    def intervals(self) -> list[tuple[int, int]]:
        return [(off, off + src.eff_width) for src, off in self.segments]


@dataclass(frozen=True)
class AdderTreePlan:
    summands: tuple[Summand, ...]
    pre_adds: tuple[PreAdd, ...]

    @property
    def adder_count(self) -> int:
        return len(self.summands) - 1 + len(self.pre_adds)

    @property
    def depth_levels(self) -> int:
        return _ceil_log2(len(self.summands))

    @property
    def pre_add_levels(self) -> int:
        return 1 if self.pre_adds else 0


def _ceil_log2(x: int) -> int:
    return math.ceil(math.log2(x)) if x > 1 else 0


def _fits(intervals, lo, hi) -> bool:
    return all(hi <= a or b <= lo for a, b in intervals)


def _first_fit(sources) -> list[list[Source]]:
    bins: list[list[Source]] = []
    occupied: list[list[tuple[int, int]]] = []
    for src in sources:
        lo, hi = src.span
        for b, occ in zip(bins, occupied):
            if _fits(occ, lo, hi):
                b.append(src)
                occ.append((lo, hi))
                break
        else:
            bins.append([src])
            occupied.append([(lo, hi)])
    return bins


def _term_order(t: PartialTerm):
    return (t.shift, t.i, t.j)


def pack_summands(plan: MulPlan, pre_adds: bool = False) -> AdderTreePlan:
    """Greedy first-fit packing of terms into summands by ascending shift.

    With ``pre_adds`` enabled, pairs of summands that each hold a single term
    at the same shift are replaced by one pre-added source, which is then
    placed first-fit like any other.
    """
    bins = _first_fit(sorted(plan.terms, key=_term_order))
    extra: list[PreAdd] = []
    if pre_adds:
        bins, extra = _pre_add_pass(plan, bins)
    summands = tuple(
        Summand(tuple(sorted(((s, s.span[0]) for s in b), key=lambda seg: seg[1])),
                plan.output_width)
        for b in bins)
    return AdderTreePlan(summands, tuple(extra))


def _pre_add_pass(plan: MulPlan, bins):
    extra: list[PreAdd] = []
    while True:
        singles = [b[0] for b in bins if len(b) == 1 and isinstance(b[0], PartialTerm)]
        pair = None
        for x in range(len(singles)):
            for y in range(x + 1, len(singles)):
                if singles[x].shift == singles[y].shift:
                    pair = singles[x], singles[y]
                    break
            if pair:
                break
        if pair is None:
            return bins, extra
        left, right = pair
        width = max(left.eff_width, right.eff_width) + 1
        width = min(width, plan.output_width - left.shift)
        pa = PreAdd(left, right, left.shift, width)
        extra.append(pa)
        bins = [b for b in bins if not (len(b) == 1 and b[0] in pair)]
        lo, hi = pa.span
        for b in bins:
            if _fits([s.span for s in b], lo, hi):
                b.append(pa)
                break
        else:
            bins.append([pa])


def common_case_adders(plan: MulPlan) -> int:
    """Adders needed when every term is its own summand."""
    return len(plan.terms) - 1


def tree_depth(t: AdderTreePlan) -> int:
    return t.depth_levels


def source_value(src: Source, term_values: dict[PartialTerm, int], plan: MulPlan) -> int:
    """Value of a source, shifted into place."""
    if isinstance(src, PartialTerm):
        return term_values[src]
    total = term_values[src.left] + term_values[src.right]
    return total & (((1 << src.eff_width) - 1) << src.shift)


def evaluate_layout(tree: AdderTreePlan, plan: MulPlan, a: int, b: int) -> int:
    """Sum of the packed summands for one input pair (wide-integer reference)."""
    values = dict(zip(plan.terms, plan.term_values(a, b)))
    total = sum(source_value(src, values, plan) for s in tree.summands for src, _ in s.segments)
    if plan.mode is ArithMode.LOW_HALF:
        total &= (1 << plan.output_width) - 1
    return total
