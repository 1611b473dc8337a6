# %% [markdown]
"""
# Operand splitting

A wide product is assembled from block products ``A_i * B_j`` shifted by
``m * (i + j - 2)``.  When only the low ``n`` bits are wanted, terms shifted
past ``n`` vanish and the rest need fewer output bits.
"""

# %%
from monomul import block_requirements, common_case_adders, plan_partial_products, split_operand

print(split_operand(14, 4))

# %%
full = plan_partial_products(14, 4, "full")
low = plan_partial_products(14, 4, "lowhalf")
kept = {(t.i, t.j): t for t in low.terms}
print(" term  shift  full-width  low-half")
for t in full.terms:
    k = kept.get((t.i, t.j))
    print(f"({t.i},{t.j}) {t.shift:6d} {t.eff_width:11d} {k.eff_width if k else '-':>9}")

# %%
print("adders, every term its own summand:", common_case_adders(full), "vs", common_case_adders(low))
print("block shapes (w_a, w_b, out):", sorted(block_requirements(low)))

# %% [markdown]
"""
The sum of shifted terms reproduces ``a * b`` (mod ``2**n`` in low-half mode).
"""

# %%
a, b = 12345, 9876
print(sum(full.term_values(a, b)) == a * b, sum(low.term_values(a, b)) % 2**14 == a * b % 2**14)
