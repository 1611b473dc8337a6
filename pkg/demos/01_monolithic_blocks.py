# %% [markdown]
"""
# Monolithic blocks

A monolithic multiplier is a small multiplier written directly as a two-level
AND-OR cover of its truth table.  This walkthrough builds the truth tables,
counts the full-DNF terms and minimizes them.
"""

# %%
from monomul import (block_truth_table, check_equivalence, dnf_disjunction_count, full_dnf,
                     gen_truth_table, minimize, write_pla)

# %% [markdown]
"""
Inputs are packed as ``x = a | (b << w_a)``; output bit 0 is the LSB of the
product.  The full DNF has one minterm per (input, set output bit) pair.
"""

# %%
print(" w   full  lowhalf")
for w in range(2, 9):
    full = dnf_disjunction_count(gen_truth_table(w, w, "full"))
    low = dnf_disjunction_count(gen_truth_table(w, w, "lowhalf"))
    print(f"{w:2d} {full:7d} {low:7d}")

# %% [markdown]
"""
Blocks of up to 8 inputs are minimized exactly (fewest per-output terms, then
fewest distinct cubes).  Wider blocks go through prime generation and greedy
covering.
"""

# %%
for w in (2, 3, 4, 5):
    for mode in ("full", "lowhalf"):
        f = gen_truth_table(w, w, mode)
        c = minimize(f)
        assert check_equivalence(c, f)
        print(f"{w}x{w} {mode:8s} {c.provenance.value:9s} cubes={c.cube_count:4d} "
              f"disjunctions={c.disjunctions:4d} (full DNF {dnf_disjunction_count(f)})")

# %% [markdown]
"""
Covers travel as Berkeley PLA text.  Column ``j`` of the input part is input
bit ``j``.
"""

# %%
print(write_pla(minimize(gen_truth_table(2, 2, "full"), "exact")))
print()
print(write_pla(full_dnf(block_truth_table(1, 1, 1))))
