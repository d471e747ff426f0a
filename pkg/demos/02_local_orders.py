# %% [markdown]
# Block-triangular orders over k[[s]].  The truncated algebra Delta/s^N
# is built explicitly over F_p, Hom spaces are solved as commuting linear
# maps and Ext^1 comes from a projective presentation.  The results are
# set against the closed forms.

# %%
import numpy as np

from hereditary_orders import BlockOrder, TruncatedAlgebra, comparison_table, radical_power_check

d = BlockOrder((1, 2, 1))
print("valuation floors of the order:")
print(np.array([[d.floor(a, b) for b in range(d.n)] for a in range(d.n)]))
print("valuation floors of the radical:")
print(np.array([[d.radical_floor(a, b) for b in range(d.n)] for a in range(d.n)]))

# %%
alg = TruncatedAlgebra(d, 3)
print(f"dim Delta/s^3 = {alg.dim}; generated by {len(alg.generators)} elements, span {alg.generated_dimension()}")

# %%
for N in (2, 3, 4):
    rows = comparison_table(d, N)
    summary = ", ".join(f"{r['source']}->{r['target']} {tuple(r['oracle'])}" for r in rows)
    print(f"N={N}: all agree = {all(r['agree'] for r in rows)}")
print(summary)

# %% [markdown]
# The radical raised to the number of blocks is the maximal ideal times Delta,
# and no smaller power is.

# %%
for blocks in [(1,), (1, 1), (2, 1, 3), (1, 1, 1, 1)]:
    order = BlockOrder(blocks)
    print(blocks, radical_power_check(order, order.t + 1).describe())
