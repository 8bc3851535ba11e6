"""
Hypothesis checks for hyperbolicity of generalized augmentations.

A diagram passes when it is a connected, alternating, reduced, obviously
prime projection that is not the standard diagram of a 2-braid link.
Every failing flag comes with a witness that can be replayed against the
diagram.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field

from .diagram import (
    FaceMap,
    LinkDiagram,
    alternation_defect,
    build_faces,
    crossing_components,
)

__all__ = [
    "HypothesisReport",
    "is_reduced",
    "nugatory_crossing",
    "is_obviously_prime",
    "two_edge_cut",
    "is_two_braid",
    "check_hypotheses",
]


def nugatory_crossing(d: LinkDiagram, f: FaceMap) -> int | None:
    """First crossing with one face at two diagonally opposite corners."""
    for c in range(d.crossing_count):
        if f.corner_face(c, 0) == f.corner_face(c, 2):
            return c
        if f.corner_face(c, 1) == f.corner_face(c, 3):
            return c
    return None


def is_reduced(d: LinkDiagram, f: FaceMap) -> tuple[bool, int | None]:
    """``(True, None)`` or ``(False, nugatory crossing index)``."""
    c = nugatory_crossing(d, f)
    return c is None, c


def edge_sides(d: LinkDiagram, f: FaceMap) -> dict[int, tuple[int, int]]:
    """The two faces on either side of every edge.

    The first entry is the face whose boundary runs along the edge away
    from the edge's lower dart.
    """
    out = {}
    for a, (x, y) in d.edge_darts.items():
        out[a] = (f.face_of(x), f.face_of(y))
    return out


def two_edge_cut(d: LinkDiagram, f: FaceMap) -> tuple[int, int] | None:
    """Lexicographically first pair of edges whose removal separates crossings.

    In a connected plane graph, a minimal two-edge cut is a 2-cycle of the
    dual: two distinct edges lying between the same two distinct faces.
    A closed curve through those two faces meets the projection exactly at
    those edges, with crossings on both sides.
    """
    by_sides: dict[frozenset, list[int]] = {}
    for a, (p, q) in edge_sides(d, f).items():
        if p != q:
            by_sides.setdefault(frozenset((p, q)), []).append(a)
    best = None
    for labels in by_sides.values():
        if len(labels) >= 2:
            labels = sorted(labels)
            pair = (labels[0], labels[1])
            if best is None or pair < best:
                best = pair
    return best


def is_obviously_prime(d: LinkDiagram, f: FaceMap) -> tuple[bool, tuple[int, int] | None]:
    cut = two_edge_cut(d, f)
    return cut is None, cut


def is_two_braid(d: LinkDiagram, f: FaceMap) -> bool:
    """Face census test for the standard (2, C) torus link diagram.

    C bigons plus two C-gons; for C = 2 the census degenerates to four
    bigons.
    """
    c = d.crossing_count
    if c < 2:
        return False
    census = Counter(f.sizes())
    if c == 2:
        return census == Counter({2: 4})
    return census[2] == c and census[c] == 2 and len(f) == c + 2


@dataclass(frozen=True)
class HypothesisReport:
    connected: bool
    alternating: bool
    reduced: bool
    obviously_prime: bool
    two_braid: bool
    witnesses: list[dict] = field(default_factory=list)

    @property
    def passes(self) -> bool:
        return (self.connected and self.alternating and self.reduced
                and self.obviously_prime and not self.two_braid)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["passes"] = self.passes
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kw)


def check_hypotheses(d: LinkDiagram) -> HypothesisReport:
    """Evaluate every hypothesis flag.

    All flags are computed even when an earlier one fails; for a split
    diagram the face-based flags then describe each piece separately.
    """
    f = build_faces(d)
    witnesses = []

    pieces = crossing_components(d)
    connected = len(pieces) == 1
    if not connected:
        witnesses.append({"flag": "connected", "components": pieces})

    bad_edge = alternation_defect(d)
    if bad_edge is not None:
        x, y = d.edge_darts[bad_edge]
        witnesses.append({"flag": "alternating", "edge": bad_edge,
                          "darts": [list(x), list(y)]})

    reduced, nug = is_reduced(d, f)
    if not reduced:
        diag = 0 if f.corner_face(nug, 0) == f.corner_face(nug, 2) else 1
        witnesses.append({"flag": "reduced", "crossing": nug,
                          "corners": [diag, diag + 2],
                          "face": f.corner_face(nug, diag)})

    prime, cut = is_obviously_prime(d, f)
    if not prime:
        witnesses.append({"flag": "obviously_prime", "edges": list(cut)})

    two_braid = is_two_braid(d, f)
    if two_braid:
        witnesses.append({"flag": "two_braid",
                          "face_sizes": sorted(f.sizes())})

    return HypothesisReport(connected, bad_edge is None, reduced, prime,
                            two_braid, witnesses)
