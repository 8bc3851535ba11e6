"""Hypothesis checks, vertical-component planning and belted-sum volumes
for alternating link diagrams."""

__version__ = "0.1.0"

from .diagram import (
    Dart,
    Face,
    FaceMap,
    LinkDiagram,
    build_faces,
    canonicalize,
    is_alternating,
    mirror,
    parse_pd,
    projection_components,
    serialize,
)
from .gate import HypothesisReport, check_hypotheses
from .planner import (
    ArcSystem,
    AugmentationArc,
    Infeasible,
    build_augmented_link,
    build_dual,
    candidate_pairs,
    enumerate_shortest_routes,
    maximal_system,
    min_puncture_route,
    realize_disjoint_system,
)
from .volume import (
    OCT,
    OCT_VOLUME,
    Leaf,
    Offset,
    Sum,
    VolumeExpr,
    belted_sum,
    daisy_chain_volume,
    evaluate,
    numeric,
    v_oct,
)
