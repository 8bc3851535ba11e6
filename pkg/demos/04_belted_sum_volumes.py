# Volumes of belted sums
# ======================
#
# Gluing two links along n belt components costs 4(n - 2) octahedra of
# volume; expressions are kept exact with rational coefficients.

# %%
from auglab import OCT_VOLUME, Leaf, Offset, Sum, VolumeExpr, belted_sum, evaluate, numeric
from auglab.volume import borromean_rings

A, B = VolumeExpr.symbol("A"), VolumeExpr.symbol("B")
for n in range(2, 6):
    print(f"n={n}: {belted_sum(A, B, n)}")

# %% [markdown]
# The octahedron volume is eight times the Lobachevsky function at pi/4.

# %%
print("OCT =", OCT_VOLUME, " Borromean rings =", numeric(borromean_rings()))

# %% [markdown]
# A chain of five pieces glued by classical belted sums, with an
# explicit accounting of discarded and recovered octahedra.

# %%
tree = Leaf("L1")
for i in range(2, 6):
    tree = Sum(tree, Leaf(f"L{i}"), 2)
tree = Offset(tree, VolumeExpr({"OCT": -20}) + borromean_rings())
expr = evaluate(tree)
print(expr)
print("offset:", numeric(expr, {f"L{i}": 0.0 for i in range(1, 6)}))
