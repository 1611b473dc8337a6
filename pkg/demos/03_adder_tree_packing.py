# %% [markdown]
"""
# Packing partial products

Terms whose bit ranges do not overlap can share one addend by plain
concatenation, so the final adder tree shrinks.  Packing is greedy first-fit
by ascending shift.
"""

# %%
from monomul import common_case_adders, default_group_width, pack_summands, plan_partial_products

plan = plan_partial_products(14, 4, "full")
tree = pack_summands(plan)


def show(tree, width):
    for s in tree.summands:
        row = ["."] * width
        for src, off in s.segments:
            tag = getattr(src, "label", "?")
            for bit in range(off, off + src.eff_width):
                row[width - 1 - bit] = tag[0] if hasattr(src, "i") else "+"
        names = ", ".join(src.label for src, _ in s.segments)
        print("".join(row), " ", names)


show(tree, plan.output_width)
print("adders:", tree.adder_count, "depth:", tree.depth_levels)

# %% [markdown]
"""
The optional pre-add pass merges two lone terms at the same shift before the
tree.  The adder count stays the same here; the layout matches a hand packing
with six summands.
"""

# %%
show(pack_summands(plan, pre_adds=True), plan.output_width)

# %%
print(" n   full common/reduced   lowhalf common/reduced")
for n in range(8, 33, 2):
    m = default_group_width(n)
    f = plan_partial_products(n, m, "full")
    lo = plan_partial_products(n, m, "lowhalf")
    print(f"{n:2d}   {common_case_adders(f):4d} / {pack_summands(f).adder_count:<4d}"
          f"          {common_case_adders(lo):4d} / {pack_summands(lo).adder_count:<4d}")
