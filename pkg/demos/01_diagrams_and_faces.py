# Diagrams and their faces
# ========================
#
# A diagram is given by its PD code: one X(a,b,c,d) per crossing, listing
# the four incident edge labels counterclockwise, starting from the
# incoming understrand.

# %%
from auglab import build_faces, is_alternating, parse_pd, serialize
from auglab.constructions import grid_diagram, torus_2_braid

trefoil = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
print(serialize(trefoil), "->", trefoil.crossing_count, "crossings,",
      trefoil.edge_count, "edges")

# %% [markdown]
# Faces are traced corner by corner.  For a connected diagram on the
# sphere, Euler's formula forces exactly C + 2 of them.

# %%
faces = build_faces(trefoil)
for i, face in enumerate(faces.faces):
    print(f"face {i}: size {face.size}, edges {face.edges}")
assert len(faces) == trefoil.crossing_count + 2

# %% [markdown]
# Larger alternating diagrams come from medial graphs of plane graphs.

# %%
for d in (torus_2_braid(5), grid_diagram(3, 3)):
    f = build_faces(d)
    print(d.crossing_count, "crossings,", len(f), "faces, sizes", sorted(f.sizes()),
          "alternating:", is_alternating(d))
