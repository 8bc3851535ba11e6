# Planning vertical components
# ============================
#
# A vertical component meets the projection plane once in each of two
# faces that share no edge.  Its projection is an arc; a minimal one
# crosses the diagram as few times as possible, which is the distance
# between the two faces in the dual graph.

# %%
from auglab import (ArcSystem, build_augmented_link, build_dual, build_faces,
                    candidate_pairs, maximal_system, min_puncture_route,
                    realize_disjoint_system)
from auglab.constructions import grid_diagram, standard

d = standard("4_1")
f = build_faces(d)
dual = build_dual(f)
for a, b, n in candidate_pairs(f, dual):
    arc = min_puncture_route(dual, a, b)
    print(f"faces {a},{b}: {arc.punctures} punctures ({arc.kind}), route {arc.route}")

# %% [markdown]
# Several arcs must be drawn disjointly while each stays minimal.  On the
# figure-eight every candidate pair fits at once.

# %%
system = maximal_system(f)
print(len(system.arcs), "arcs:", [arc.endpoints for arc in system.arcs])
link = build_augmented_link(d, system)
print("classification:", link.classification, "hyperbolic certificate:", link.hyperbolic)

# %% [markdown]
# On a grid weave, the two diagonals through the middle cannot both be
# realized minimally without crossing.

# %%
g = grid_diagram(3, 3)
result = realize_disjoint_system(build_faces(g), [(1, 11), (6, 9)])
print(type(result).__name__, result.to_dict() if not isinstance(result, ArcSystem) else "")
