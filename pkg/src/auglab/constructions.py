"""
Builders for test and demo diagrams.

The main tool is :func:`medial_diagram`: every connected plane graph G
has a medial graph, a 4-regular plane graph with one crossing per edge
of G, and choosing crossings so that the regions around each vertex of G
are always "on the left" of the overstrand yields an alternating
diagram.  Faces of the result correspond to the vertices and faces of G.
"""

from __future__ import annotations

import math
from typing import Hashable, Mapping, Sequence

from .diagram import Dart, LinkDiagram, canonicalize, parse_pd

__all__ = [
    "STANDARD",
    "standard",
    "medial_diagram",
    "rotation_from_positions",
    "grid_graph",
    "wheel_graph",
    "cycle_graph",
    "grid_diagram",
    "torus_2_braid",
    "connected_sum",
    "disjoint_union",
    "add_kink",
    "change_all_crossings",
    "heads",
]

# Rolfsen-table PD codes in the slot convention used here.
STANDARD = {
    "3_1": "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
    "4_1": "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
    "5_1": "X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)",
    "5_2": "X(1,4,2,5) X(3,8,4,9) X(5,10,6,1) X(9,6,10,7) X(7,2,8,3)",
    "6_1": "X(1,4,2,5) X(7,10,8,11) X(3,9,4,8) X(9,3,10,2) X(5,12,6,1) X(11,6,12,7)",
    "6_2": "X(1,4,2,5) X(5,10,6,11) X(3,9,4,8) X(9,3,10,2) X(7,12,8,1) X(11,6,12,7)",
    "6_3": "X(4,2,5,1) X(8,4,9,3) X(12,9,1,10) X(10,5,11,6) X(6,11,7,12) X(2,8,3,7)",
    "7_1": "X(1,8,2,9) X(3,10,4,11) X(5,12,6,13) X(7,14,8,1) X(9,2,10,3) "
           "X(11,4,12,5) X(13,6,14,7)",
    "kink": "X(1,2,2,1)",
}


def standard(name: str) -> LinkDiagram:
    return parse_pd(STANDARD[name])


# -- plane graphs --------------------------------------------------------

Rotation = Mapping[Hashable, Sequence[Hashable]]


def rotation_from_positions(pos: Mapping, edges) -> dict:
    """Counterclockwise neighbour lists from straight-line vertex positions."""
    nbrs: dict = {v: [] for v in pos}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)

    def angle(v, w):
        (x0, y0), (x1, y1) = pos[v], pos[w]
        return math.atan2(y1 - y0, x1 - x0)

    return {v: sorted(ws, key=lambda w: angle(v, w)) for v, ws in nbrs.items()}


def grid_graph(rows: int, cols: int) -> dict:
    pos = {(i, j): (j, -i) for i in range(rows) for j in range(cols)}
    edges = [((i, j), (i, j + 1)) for i in range(rows) for j in range(cols - 1)]
    edges += [((i, j), (i + 1, j)) for i in range(rows - 1) for j in range(cols)]
    return rotation_from_positions(pos, edges)


def cycle_graph(n: int) -> dict:
    pos = {k: (math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n))
           for k in range(n)}
    return rotation_from_positions(pos, [(k, (k + 1) % n) for k in range(n)])


def wheel_graph(n: int) -> dict:
    """Cycle on ``n`` rim vertices plus a hub joined to all of them."""
    pos = {k: (math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n))
           for k in range(n)}
    pos["hub"] = (0.0, 0.0)
    edges = [(k, (k + 1) % n) for k in range(n)] + [("hub", k) for k in range(n)]
    return rotation_from_positions(pos, edges)


def medial_diagram(rotation: Rotation) -> LinkDiagram:
    """Alternating diagram whose projection is the medial graph of a plane graph.

    ``rotation`` maps each vertex to its neighbours in counterclockwise
    order; the graph must be simple and connected.  Crossing ``i`` sits
    on the ``i``-th edge of the graph in sorted order.
    """
    def nxt(v, a):
        ws = rotation[v]
        return ws[(list(ws).index(a) + 1) % len(ws)]

    def prv(v, a):
        ws = rotation[v]
        return ws[(list(ws).index(a) - 1) % len(ws)]

    order = {v: k for k, v in enumerate(sorted(rotation, key=repr))}
    edges = sorted({tuple(sorted((u, v), key=order.get))
                    for u in rotation for v in rotation[u]},
                   key=lambda e: (order[e[0]], order[e[1]]))
    if not edges:
        raise ValueError("graph has no edges")
    # a medial edge runs through the corner (v, a, next_v(a)); label corners
    corner_label: dict = {}

    def corner(v, a, b):
        return corner_label.setdefault((v, a, b), len(corner_label) + 1)

    ends = []
    for u, v in edges:
        # u -> v drawn eastward; ends listed counterclockwise NE, NW, SW, SE
        ends.append([
            corner(v, prv(v, u), u),
            corner(u, v, nxt(u, v)),
            corner(u, prv(u, v), v),
            corner(v, u, nxt(v, u)),
        ])
    # NW and SE are the understrand ends: the corner counterclockwise
    # after each of them is a vertex region of the graph.
    incoming = _orient(ends)
    tuples = []
    for i, e in enumerate(ends):
        k0 = 1 if Dart(i, 1) in incoming else 3
        tuples.append(tuple(e[(k0 + j) % 4] for j in range(4)))
    return canonicalize(LinkDiagram(tuple(tuples)))


def _orient(ends) -> set[Dart]:
    """Entry darts of an arbitrary orientation of every strand."""
    where: dict[int, list[Dart]] = {}
    for i, e in enumerate(ends):
        for k, a in enumerate(e):
            where.setdefault(a, []).append(Dart(i, k))

    def other(d):
        a, b = where[ends[d.crossing][d.slot]]
        return b if d == a else a

    entries: set[Dart] = set()
    visited: set[Dart] = set()
    for i in range(len(ends)):
        for k in range(4):
            start = Dart(i, k)
            if start in visited:
                continue
            d = start
            while d not in visited:
                visited.add(d)
                visited.add(d.rotate(2))
                entries.add(d)
                d = other(d.rotate(2))
    return entries


def grid_diagram(rows: int, cols: int) -> LinkDiagram:
    """Alternating weave on the medial graph of a ``rows x cols`` grid of vertices."""
    return medial_diagram(grid_graph(rows, cols))


def torus_2_braid(n: int) -> LinkDiagram:
    """Standard reduced alternating diagram of the (2, n) torus link, n >= 3."""
    return medial_diagram(cycle_graph(n))


# -- surgery on PD codes -------------------------------------------------

def heads(d: LinkDiagram) -> set[Dart]:
    """Darts where an edge ends under the strand orientation of ``d``."""
    return {x for strand in d.strands for x in strand}


def change_all_crossings(d: LinkDiagram) -> LinkDiagram:
    """Switch over and under everywhere, keeping the projection and orientation."""
    hd = heads(d)
    rows = []
    for c, x in enumerate(d.crossings):
        # the new understrand is the old overstrand, entered at slot 1 or 3
        k = 1 if Dart(c, 1) in hd else 3
        rows.append(tuple(x[(k + j) % 4] for j in range(4)))
    return LinkDiagram(tuple(rows))


def _shift(d: LinkDiagram, offset: int) -> list[list[int]]:
    return [[a + offset for a in x] for x in d.crossings]


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    """Split diagram: the two projections share nothing."""
    off = max(d1.edges)
    return LinkDiagram(tuple(map(tuple, [list(x) for x in d1.crossings] + _shift(d2, off))))


def connected_sum(d1: LinkDiagram, d2: LinkDiagram, e1: int | None = None,
                  e2: int | None = None, alternating: bool = True) -> LinkDiagram:
    """Splice ``d1`` along edge ``e1`` with ``d2`` along edge ``e2``.

    Labels of ``d1`` are kept; ``d2`` is shifted past them.  After the
    splice, ``e1`` and ``e2 + shift`` are exactly the two edges crossing
    the separating circle.  With ``alternating=True`` the second summand
    is mirrored when needed so that alternation is preserved.
    """
    e1 = d1.edges[0] if e1 is None else e1
    e2 = d2.edges[0] if e2 is None else e2
    if alternating:
        # tail parity of e1 must differ from head parity of e2
        h1, h2 = heads(d1), heads(d2)
        t1 = next(x for x in d1.edge_darts[e1] if x not in h1)
        y2 = next(x for x in d2.edge_darts[e2] if x in h2)
        if t1.is_under == y2.is_under:
            d2 = change_all_crossings(d2)
    off = max(d1.edges)
    f = e2 + off
    h1, h2 = heads(d1), heads(d2)
    x2 = next(x for x in d1.edge_darts[e1] if x in h1)
    y2 = next(x for x in d2.edge_darts[e2] if x in h2)
    a = [list(x) for x in d1.crossings]
    b = _shift(d2, off)
    a[x2.crossing][x2.slot] = f
    b[y2.crossing][y2.slot] = e1
    return LinkDiagram(tuple(map(tuple, a + b)))


def add_kink(d: LinkDiagram, edge: int | None = None) -> tuple[LinkDiagram, int]:
    """Insert a Reidemeister-I curl on ``edge``; return the diagram and the curl's crossing.

    The curl is chosen so that an alternating diagram stays alternating.
    """
    edge = d.edges[0] if edge is None else edge
    hd = heads(d)
    x1, x2 = d.edge_darts[edge]
    if x1 in hd:
        x1, x2 = x2, x1
    loop, out = max(d.edges) + 1, max(d.edges) + 2
    if x1.is_under:
        curl = (loop, edge, out, loop)
    else:
        curl = (edge, loop, loop, out)
    rows = [list(x) for x in d.crossings]
    rows[x2.crossing][x2.slot] = out
    rows.append(list(curl))
    return LinkDiagram(tuple(map(tuple, rows))), len(rows) - 1
