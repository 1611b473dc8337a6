# %% [markdown]
"""
# Netlists, Verilog and verification

``build`` runs the whole flow: plan, minimize each distinct block once, pack
the summands and lower everything to a netlist.
"""

# %%
from monomul import VerifyConfig, build, evaluate, run_verify, stats_for, write_stats, write_verilog
from monomul.verify import drop_cube

design = build(14, 4, "full")
nl = design.netlist
print(nl.name, len(nl.blocks), "blocks,", len(nl.covers), "block definitions,", len(nl.adders), "adders")
print(evaluate(nl, 16383, 16383), 16383 * 16383)

# %%
text = write_verilog(nl)
print("\n".join(text.splitlines()[-20:]))

# %%
print(run_verify(nl, VerifyConfig(14, 4, "full", "random", trials=200_000, seed=3)))
small = build(10, 5, "lowhalf").netlist
print(run_verify(small, VerifyConfig(10, 5, "lowhalf", "exhaustive")).passed)

# %% [markdown]
"""
Dropping a single product term from a block is caught with a concrete witness.
"""

# %%
broken = drop_cube(nl, (4, 4, 8), 0)
res = run_verify(broken, VerifyConfig(14, 4, "full", "random", trials=200_000, seed=3))
print(res.passed, res.mismatches[:2])

# %%
print(write_stats([stats_for(design)]))
