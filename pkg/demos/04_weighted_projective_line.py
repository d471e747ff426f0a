# %% [markdown]
# Hilbert functions of the weighted projective line ring, compared with
# the ring of sections coming from the order, and with a rank computation
# that never assumes a monomial basis.

# %%
import random

from hereditary_orders import GradedRingSpec, normalize_points, verify_hilbert_match

points = ["3", "5", "7", "11"]
normalized, mobius = normalize_points(points)
print("points", points, "->", normalized)
print("Mobius matrix", mobius)

# %%
report = verify_hilbert_match((2, 2, 3, 3), points, phi_bound=6, with_oracle=True)
print("degree, phi, normal monomials, sections, rank oracle")
for row in [r for r in report.rows if r.dim_wpl][:12]:
    print(row.degree, row.phi, row.dim_wpl, row.dim_order, row.dim_oracle)
print("all match:", report.match)

# %% [markdown]
# The numbers do not depend on the points.

# %%
rng = random.Random(1)
e = (2, 2, 3, 3)
for _ in range(3):
    pts = [str(x) for x in rng.sample(range(-20, 21), 4)]
    rep = verify_hilbert_match(e, pts, 10, with_oracle=True)
    lam = GradedRingSpec.from_points(e, pts).lambdas
    print(pts, "lambda_4 =", lam[1], "total dim up to phi 10:", sum(r.dim_wpl for r in rep.rows), rep.match)

# %% [markdown]
# Degenerate branches: one weight gives k[u, v] with deg v = e h, no
# weights gives the plain coordinate ring of P^1.

# %%
print([r.dim_wpl for r in verify_hilbert_match((3,), None, 12).rows])
print([r.dim_wpl for r in verify_hilbert_match((), None, 8).rows])
