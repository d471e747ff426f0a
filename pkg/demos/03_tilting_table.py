# %% [markdown]
# Hom and Ext^1 between the summands of the tilting object for a sheaf of
# hereditary orders on P^1, checked against the K_0 rank.

# %%
from hereditary_orders import (
    SheafOrderSpec,
    canonical_cartan,
    cartan_matrix,
    coxeter_polynomial,
    hom_ext_table,
    k0_rank,
    verify_tilting,
)

spec = SheafOrderSpec((2, 3))
table = hom_ext_table(spec)
print(table.to_text())

# %%
for e in [(2, 2, 2), (2, 3, 7), (3, 3, 4, 5)]:
    s = SheafOrderSpec(e)
    t = hom_ext_table(s)
    print(f"e={e}: {t.size} summands, K_0 rank {k0_rank(s).rank}, tilting {bool(verify_tilting(t, s))}")

# %% [markdown]
# Negative controls: drop a summand, or plant an extension.

# %%
s = SheafOrderSpec((2, 3, 7))
t = hom_ext_table(s)
print(verify_tilting(t.drop("E(-1)"), s).reasons)
print(verify_tilting(t.with_entry("E", "S[1,2]", (1, 1)), s).reasons)

# %% [markdown]
# The canonical algebra on the same weights has a different Cartan matrix
# under the obvious vertex matching, yet the same Coxeter polynomial.

# %%
e = (2, 2, 2)
tilt = cartan_matrix(hom_ext_table(SheafOrderSpec(e)))
canon = canonical_cartan(e, (1,))
for name, c in [("tilting", tilt), ("canonical", canon)]:
    print(name)
    for row in c:
        print("  ", row)
    print("   Coxeter polynomial:", coxeter_polynomial(c))
