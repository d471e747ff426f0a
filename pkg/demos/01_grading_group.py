# %% [markdown]
# The grading group H for a few weight sequences: its Smith form,
# torsion, degree map and a handful of canonical elements.

# %%
from hereditary_orders import GradingGroup

for e in [(2, 3, 7), (2, 2, 2), (2, 4, 6), ()]:
    H = GradingGroup(e)
    print(f"e={e}: relations {H.relation_matrix}, invariant factors {H.snf.d}")
    print(f"   free rank {H.free_rank}, torsion {H.torsion or 'none'}, phi(h_i) = {H.phi_values}")

# %% [markdown]
# Every fibre of phi is a coset of the torsion part, so for (2,2,2)
# each degree holds four elements.

# %%
H = GradingGroup((2, 2, 2))
for k in range(4):
    print(k, sorted(g.canonical for g in H.canonical_elements(k, k)))

# %%
h1, h2, h3 = H.gen(1), H.gen(2), H.gen(3)
print("2h1 == 2h2 == 2h3:", h1 * 2 == h2 * 2 == h3 * 2)
print("h1 + h2 + h3 in canonical form:", (h1 + h2 + h3).canonical)
