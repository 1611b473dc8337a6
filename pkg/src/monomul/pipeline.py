"""End-to-end construction: plan, minimize blocks, pack, lower."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .compose import BlockShape, MulPlan, block_requirements, default_group_width, plan_partial_products
from .minimize import Cover, minimize
from .netlist import Netlist, lower
from .reduce import AdderTreePlan, pack_summands
from .tables import ArithMode, block_truth_table


@lru_cache(maxsize=None)
def block_cover(w_a: int, w_b: int, out_width: int, method: str = "auto") -> Cover:
    """Minimized cover of one block shape; cached per process."""
    return minimize(block_truth_table(w_a, w_b, out_width), method)


@dataclass(frozen=True, eq=False)
class Design:
    plan: MulPlan
    tree: AdderTreePlan
    covers: dict[BlockShape, Cover]
    netlist: Netlist
    minimizer: str


def build(n: int, m: int | None = None, mode: ArithMode | str = ArithMode.FULL_WIDTH,
          minimizer: str = "auto", pre_adds: bool = False) -> Design:
    if m is None:
        m = default_group_width(n)
    plan = plan_partial_products(n, m, mode)
    tree = pack_summands(plan, pre_adds=pre_adds)
    covers = {s: block_cover(*s, method=minimizer) for s in sorted(block_requirements(plan))}
    # covers come straight from the minimizers, which are verified separately
    netlist = lower(plan, tree, covers, check=False)
    return Design(plan, tree, covers, netlist, minimizer)
