# Checking the hypotheses
# =======================
#
# Augmentations are certified only for connected, alternating, reduced,
# obviously prime diagrams that are not 2-braids.  `check_hypotheses`
# evaluates every flag and attaches a replayable witness to each failure.

# %%
from auglab import check_hypotheses, parse_pd
from auglab.constructions import add_kink, connected_sum, disjoint_union, standard

cases = {
    "figure-eight": standard("4_1"),
    "trefoil": standard("3_1"),
    "kinked figure-eight": add_kink(standard("4_1"))[0],
    "5_2 # trefoil": connected_sum(standard("5_2"), standard("3_1")),
    "two figure-eights, apart": disjoint_union(standard("4_1"), standard("4_1")),
}

# %%
for name, d in cases.items():
    r = check_hypotheses(d)
    print(f"{name:26s} passes={r.passes!s:5s} witnesses={r.witnesses}")

# %% [markdown]
# The report is plain JSON, suitable for storing next to the diagram.

# %%
print(check_hypotheses(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")).to_json(indent=2))
