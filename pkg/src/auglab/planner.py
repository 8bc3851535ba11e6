"""
Vertical components as arcs in the projection plane.

A vertical component meeting the projection sphere once in face ``a``
and once in face ``b`` projects to an arc from ``a`` to ``b``.  Its
puncture count is the number of diagram edges the arc crosses, so a
minimal representative is a shortest path in the dual graph.

Several arcs can be added together only if they can be drawn pairwise
disjoint while each stays minimal.  Inside a face, an arc passing
through is a chord between two points on the boundary; an arc ending in
the face contributes a short spur that can be placed next to its
boundary point and never obstructs anything.  Chords in the same face
must not interleave, and the points of different arcs on a shared edge
must come in one linear order seen consistently from both sides.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .diagram import Dart, FaceMap, LinkDiagram, build_faces
from .gate import HypothesisReport, check_hypotheses

__all__ = [
    "DEFAULT_CAP",
    "DualGraph",
    "AugmentationArc",
    "Attachment",
    "Segment",
    "ArcSystem",
    "Infeasible",
    "AugmentedLink",
    "PlannerError",
    "NoPath",
    "InvalidPair",
    "CapExceeded",
    "HypothesisFailure",
    "InvalidSystem",
    "build_dual",
    "dual_distances",
    "candidate_pairs",
    "min_puncture_route",
    "enumerate_shortest_routes",
    "realize_disjoint_system",
    "maximal_system",
    "verify_system",
    "build_augmented_link",
]

DEFAULT_CAP = 64


class PlannerError(ValueError):
    pass


class NoPath(PlannerError):
    pass


class InvalidPair(PlannerError):
    pass


class HypothesisFailure(PlannerError):
    def __init__(self, report: HypothesisReport):
        super().__init__("diagram fails the hypothesis gate: "
                         + json.dumps(report.witnesses, sort_keys=True))
        self.report = report


class InvalidSystem(PlannerError):
    pass


class CapExceeded(PlannerError):
    """No realization found, but some route enumeration was truncated."""

    def __init__(self, cap: int, truncated: list[tuple[int, int]]):
        super().__init__(f"search truncated at cap={cap} for pairs {truncated}")
        self.cap = cap
        self.truncated = truncated


# -- dual graph ----------------------------------------------------------

@dataclass(frozen=True)
class DualGraph:
    """One node per face, one edge per diagram edge.

    ``edges[label] = (p, q)`` where ``p`` is the face running along the
    edge away from its lower dart and ``q`` the face on the other side.
    """

    node_count: int
    edges: dict[int, tuple[int, int]]
    positions: dict[tuple[int, int], int] = field(repr=False)
    face_sizes: tuple[int, ...] = field(repr=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> list[tuple[int, int]]:
        """``(label, face)`` pairs around ``u``, sorted by label."""
        out = []
        for a, (p, q) in self.edges.items():
            if p == u:
                out.append((a, q))
            elif q == u:
                out.append((a, p))
        return sorted(out)

    def position(self, face: int, label: int) -> int:
        """Index of edge ``label`` along the boundary cycle of ``face``."""
        return self.positions[face, label]

    def runs_forward(self, face: int, label: int) -> bool:
        """Whether ``face`` traverses ``label`` from its lower dart."""
        return self.edges[label][0] == face


def build_dual(f: FaceMap) -> DualGraph:
    ends: dict[int, list[tuple[Dart, int]]] = {}
    positions = {}
    for i, face in enumerate(f.faces):
        for k, (dart, a) in enumerate(zip(face.darts, face.edges)):
            ends.setdefault(a, []).append((dart, i))
            positions[i, a] = k
    edges = {}
    for a in sorted(ends):
        (_, p), (_, q) = sorted(ends[a])
        edges[a] = (p, q)
    return DualGraph(len(f.faces), edges, positions, tuple(f.sizes()))


def dual_distances(dual: DualGraph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * dual.node_count
    dist[source] = 0
    queue = deque([source])
    adj = _adjacency(dual)
    while queue:
        u = queue.popleft()
        for _, w in adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _adjacency(dual: DualGraph) -> list[list[tuple[int, int]]]:
    adj: list[list[tuple[int, int]]] = [[] for _ in range(dual.node_count)]
    for a, (p, q) in sorted(dual.edges.items()):
        adj[p].append((a, q))
        if q != p:
            adj[q].append((a, p))
    return adj


def candidate_pairs(f: FaceMap, dual: DualGraph | None = None) -> list[tuple[int, int, int]]:
    """Face pairs sharing no edge, as ``(a, b, distance)`` with ``a < b``."""
    dual = build_dual(f) if dual is None else dual
    adjacent = {frozenset(pq) for pq in dual.edges.values()}
    out = []
    for a in range(dual.node_count):
        dist = dual_distances(dual, a)
        for b in range(a + 1, dual.node_count):
            if frozenset((a, b)) not in adjacent and dist[b] is not None:
                out.append((a, b, dist[b]))
    return out


# -- routes --------------------------------------------------------------

@dataclass(frozen=True)
class AugmentationArc:
    """Projection of one vertical component.

    ``route`` lists the crossed edges from ``endpoints[0]`` to
    ``endpoints[1]``; ``faces`` lists the faces visited, endpoints
    included.
    """

    endpoints: tuple[int, int]
    route: tuple[int, ...]
    faces: tuple[int, ...]

    @property
    def punctures(self) -> int:
        return len(self.route)

    @property
    def kind(self) -> str:
        return "classical" if self.punctures == 2 else "generalized"

    def reversed(self) -> "AugmentationArc":
        return AugmentationArc(self.endpoints[::-1], self.route[::-1], self.faces[::-1])

    def to_dict(self) -> dict:
        return {"endpoints": list(self.endpoints), "route": list(self.route),
                "faces": list(self.faces), "punctures": self.punctures,
                "kind": self.kind}


def _shortest_routes(dual: DualGraph, a: int, b: int):
    """Yield shortest dual paths from ``a`` to ``b`` in lexicographic order."""
    dist = dual_distances(dual, b)
    if dist[a] is None:
        raise NoPath(f"faces {a} and {b} are not connected")
    adj = _adjacency(dual)

    def walk(u, labels, faces):
        if u == b:
            yield AugmentationArc((a, b), tuple(labels), tuple(faces))
            return
        for label, w in adj[u]:
            if dist[w] == dist[u] - 1:
                labels.append(label)
                faces.append(w)
                yield from walk(w, labels, faces)
                labels.pop()
                faces.pop()

    yield from walk(a, [], [a])


def min_puncture_route(dual: DualGraph, a: int, b: int) -> AugmentationArc:
    """Lexicographically first shortest route from face ``a`` to face ``b``."""
    return next(_shortest_routes(dual, a, b))


def enumerate_shortest_routes(dual: DualGraph, a: int, b: int,
                              cap: int = DEFAULT_CAP) -> list[AugmentationArc]:
    if cap < 1:
        raise ValueError("cap must be at least 1")
    out = []
    for arc in _shortest_routes(dual, a, b):
        out.append(arc)
        if len(out) == cap:
            break
    return out


# -- pairwise drawing constraints ----------------------------------------

def _chords(arc: AugmentationArc) -> dict[int, tuple[int, ...]]:
    """Edges met by ``arc`` in each face: two for a pass-through, one at an end."""
    out = {arc.faces[0]: (arc.route[0],), arc.faces[-1]: (arc.route[-1],)}
    for j in range(1, len(arc.faces) - 1):
        out[arc.faces[j]] = (arc.route[j - 1], arc.route[j])
    return out


def _interleave(p1, q1, p2, q2, size) -> bool:
    """Chords with pairwise distinct ends on a cycle of ``size`` positions."""
    def inside(x):
        return 0 < (x - p1) % size < (q1 - p1) % size
    return inside(p2) != inside(q2)


class _Conflict(Exception):
    pass


def _pair_constraints(dual: DualGraph, ca: dict, cb: dict):
    """Constraints between two arcs on their relative order along shared edges.

    Variables are ``x[e]`` = "first arc precedes second along edge ``e``
    from its lower dart".  Returns ``(fixed, links)`` with ``fixed`` a
    list of ``(e, value)`` and ``links`` a list of ``(e1, e2, parity)``
    meaning ``x[e1] xor x[e2] == parity``.  Raises ``_Conflict`` when
    the two arcs must cross.
    """
    fixed, links = [], []
    for face in ca.keys() & cb.keys():
        ea, eb = ca[face], cb[face]
        if len(ea) == 1 or len(eb) == 1:
            continue  # an end spur sits beside its boundary point
        size = dual.face_sizes[face]
        pos = dual.position
        shared = set(ea) & set(eb)
        if not shared:
            if _interleave(pos(face, ea[0]), pos(face, ea[1]),
                           pos(face, eb[0]), pos(face, eb[1]), size):
                raise _Conflict(face)
        elif len(shared) == 1:
            (e,) = shared
            oa = ea[1] if ea[0] == e else ea[0]
            ob = eb[1] if eb[0] == e else eb[0]
            pe = pos(face, e)
            # the arc whose far end comes sooner after e must sit later on e
            a_first = (pos(face, ob) - pe) % size < (pos(face, oa) - pe) % size
            fwd = dual.runs_forward(face, e)
            fixed.append((e, a_first if fwd else not a_first))
        else:
            e1, e2 = sorted(shared)
            # parallel chords nest: their order flips between the two edges
            # as read along this face's boundary
            same_dir = dual.runs_forward(face, e1) == dual.runs_forward(face, e2)
            links.append((e1, e2, 1 if same_dir else 0))
    return fixed, links


class _ParityUnion:
    def __init__(self):
        self.parent: dict = {}
        self.parity: dict = {}

    def find(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.parity[x] = 0
            return x, 0
        p = 0
        root = x
        while self.parent[root] != root:
            p ^= self.parity[root]
            root = self.parent[root]
        # path compression
        q = p
        while self.parent[x] != root:
            nxt, px = self.parent[x], self.parity[x]
            self.parent[x], self.parity[x] = root, q
            q ^= px
            x = nxt
        return root, p

    def union(self, x, y, parity) -> bool:
        (rx, px), (ry, py) = self.find(x), self.find(y)
        if rx == ry:
            return (px ^ py) == parity
        self.parent[rx] = ry
        self.parity[rx] = px ^ py ^ parity
        return True


_TRUE = ("const",)


def _solve_orders(dual: DualGraph, arcs: list[AugmentationArc]):
    """Per-edge linear orders for ``arcs`` drawn disjointly, or None."""
    chords = [_chords(arc) for arc in arcs]
    uf = _ParityUnion()
    uf.find(_TRUE)
    for i, j in combinations(range(len(arcs)), 2):
        try:
            fixed, links = _pair_constraints(dual, chords[i], chords[j])
        except _Conflict:
            return None
        for e, value in fixed:
            if not uf.union((e, i, j), _TRUE, 0 if value else 1):
                return None
        for e1, e2, parity in links:
            if not uf.union((e1, i, j), (e2, i, j), parity):
                return None

    on_edge: dict[int, list[int]] = {}
    for i, arc in enumerate(arcs):
        for e in arc.route:
            on_edge.setdefault(e, []).append(i)
    variables = [(e, i, j) for e, ids in sorted(on_edge.items())
                 for i, j in combinations(ids, 2)]
    free_roots = sorted({uf.find(v)[0] for v in variables} - {uf.find(_TRUE)[0]},
                        key=repr)
    triangles = [(e, i, j, k) for e, ids in sorted(on_edge.items())
                 for i, j, k in combinations(ids, 3)]

    true_root, true_parity = uf.find(_TRUE)
    # the root's value is chosen so that the constant itself reads True
    assign: dict = {true_root: not true_parity}

    def value(v):
        root, p = uf.find(v)
        if root not in assign:
            return None
        return assign[root] != bool(p)

    def consistent():
        for e, i, j, k in triangles:
            xij, xjk, xik = value((e, i, j)), value((e, j, k)), value((e, i, k))
            if None in (xij, xjk, xik):
                continue
            # i<j<k by index; the tournament is cyclic iff xij == xjk != xik
            if xij == xjk and xik != xij:
                return False
        return True

    def search(n):
        if not consistent():
            return False
        if n == len(free_roots):
            return True
        for choice in (True, False):
            assign[free_roots[n]] = choice
            if search(n + 1):
                return True
        del assign[free_roots[n]]
        return False

    if not search(0):
        return None
    orders = {}
    for e, ids in sorted(on_edge.items()):
        before = {(i, j): value((e, i, j)) for i, j in combinations(ids, 2)}
        # rank = number of arcs that precede it
        rank = {i: 0 for i in ids}
        for (i, j), x in before.items():
            rank[j if x else i] += 1
        orders[e] = tuple(sorted(ids, key=rank.get))
    return orders


# -- systems -------------------------------------------------------------

@dataclass(frozen=True)
class Attachment:
    """Where a segment meets its face.

    ``kind == "edge"``: the point ``slot`` (0-based, counted from the
    edge's lower dart) on edge ``edge``.  ``kind == "interior"``: the
    arc's end, placed inside the face in the gap just after that
    boundary point in the face's traversal order.
    """

    kind: str
    edge: int
    slot: int

    def to_dict(self) -> dict:
        return {"kind": self.kind, "edge": self.edge, "slot": self.slot}


@dataclass(frozen=True)
class Segment:
    arc: int
    face: int
    start: Attachment
    end: Attachment

    def to_dict(self) -> dict:
        return {"arc": self.arc, "face": self.face,
                "start": self.start.to_dict(), "end": self.end.to_dict()}


@dataclass(frozen=True)
class ArcSystem:
    arcs: tuple[AugmentationArc, ...]
    edge_orders: dict[int, tuple[int, ...]]
    segments: tuple[Segment, ...]

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [arc.endpoints for arc in self.arcs]

    def to_dict(self) -> dict:
        return {
            "arcs": [arc.to_dict() for arc in self.arcs],
            "edge_orders": [{"edge": e, "order": list(o)}
                            for e, o in sorted(self.edge_orders.items())],
            "segments": [s.to_dict() for s in self.segments],
        }


@dataclass(frozen=True)
class Infeasible:
    """No disjoint minimal realization exists among the enumerated routes.

    ``certificate`` lists the pairs that already fail together; it is a
    single pair whenever some two arcs cannot coexist.
    """

    pairs: tuple[tuple[int, int], ...]
    certificate: tuple[tuple[int, int], ...]
    cap: int

    def to_dict(self) -> dict:
        return {"status": "infeasible", "cap": self.cap,
                "pairs": [list(p) for p in self.pairs],
                "certificate": [list(p) for p in self.certificate]}


def _segments(arcs, orders) -> tuple[Segment, ...]:
    out = []
    for i, arc in enumerate(arcs):
        slots = [orders[e].index(i) for e in arc.route]
        pts = [Attachment("edge", e, s) for e, s in zip(arc.route, slots)]
        first, last = pts[0], pts[-1]
        out.append(Segment(i, arc.faces[0], Attachment("interior", first.edge, first.slot),
                           first))
        for j in range(1, len(arc.faces) - 1):
            out.append(Segment(i, arc.faces[j], pts[j - 1], pts[j]))
        out.append(Segment(i, arc.faces[-1], last,
                           Attachment("interior", last.edge, last.slot)))
    return tuple(out)


def _check_pairs(f: FaceMap, dual: DualGraph, pairs) -> list[tuple[int, int]]:
    adjacent = {frozenset(pq) for pq in dual.edges.values()}
    seen = set()
    out = []
    for pair in pairs:
        a, b = (int(x) for x in pair)
        if not (0 <= a < len(f) and 0 <= b < len(f)):
            raise InvalidPair(f"face index out of range in {pair}")
        if a == b:
            raise InvalidPair(f"pair {pair} repeats a face")
        key = frozenset((a, b))
        if key in adjacent:
            raise InvalidPair(f"faces {a} and {b} share an edge")
        if key in seen:
            raise InvalidPair(f"pair {pair} given twice")
        seen.add(key)
        out.append((min(a, b), max(a, b)))
    return out


def realize_disjoint_system(f: FaceMap, pairs, cap: int = DEFAULT_CAP):
    """Find disjoint minimal arcs joining every requested face pair.

    Returns an :class:`ArcSystem` or an :class:`Infeasible` result; raises
    :class:`CapExceeded` when nothing was found but some pair had more
    than ``cap`` shortest routes.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    dual = build_dual(f)
    pairs = _check_pairs(f, dual, pairs)
    if not pairs:
        return ArcSystem((), {}, ())
    options, truncated = [], []
    for a, b in pairs:
        routes = enumerate_shortest_routes(dual, a, b, cap + 1)
        if len(routes) > cap:
            truncated.append((a, b))
            routes = routes[:cap]
        options.append(routes)

    n = len(pairs)
    # compat[i, j][x] = routes of arc j drawable disjointly from route x of arc i
    compat: dict[tuple[int, int], list[set[int]]] = {}
    for i, j in combinations(range(n), 2):
        ok_ij = [set() for _ in options[i]]
        ok_ji = [set() for _ in options[j]]
        for x, rx in enumerate(options[i]):
            for y, ry in enumerate(options[j]):
                if _solve_orders(dual, [rx, ry]) is not None:
                    ok_ij[x].add(y)
                    ok_ji[y].add(x)
        compat[i, j], compat[j, i] = ok_ij, ok_ji
        if not any(ok_ij) and pairs[i] not in truncated and pairs[j] not in truncated:
            return Infeasible(tuple(pairs), (pairs[i], pairs[j]), cap)

    chosen: dict[int, int] = {}

    def search(domains):
        if len(chosen) == n:
            return True
        # smallest remaining domain first
        i = min((k for k in range(n) if k not in chosen),
                key=lambda k: (len(domains[k]), k))
        for x in sorted(domains[i]):
            chosen[i] = x
            arcs = [options[k][chosen[k]] for k in sorted(chosen)]
            if _solve_orders(dual, arcs) is not None:
                pruned = {k: (dom & compat[i, k][x] if k not in chosen else dom)
                          for k, dom in domains.items()}
                if all(pruned[k] for k in pruned) and search(pruned):
                    return True
            del chosen[i]
        return False

    if search({k: set(range(len(options[k]))) for k in range(n)}):
        arcs = [options[k][chosen[k]] for k in range(n)]
        orders = _solve_orders(dual, arcs)
        return ArcSystem(tuple(arcs), orders, _segments(arcs, orders))
    if truncated:
        raise CapExceeded(cap, truncated)
    return Infeasible(tuple(pairs), tuple(pairs), cap)


def maximal_system(f: FaceMap, cap: int = DEFAULT_CAP) -> ArcSystem:
    """Greedily add candidate pairs (nearest first) while a realization exists.

    The result admits no further candidate pair.  Raises
    :class:`CapExceeded` if any attempt was inconclusive.
    """
    dual = build_dual(f)
    chosen: list[tuple[int, int]] = []
    system = ArcSystem((), {}, ())
    for a, b, _ in sorted(candidate_pairs(f, dual), key=lambda t: (t[2], t[0], t[1])):
        result = realize_disjoint_system(f, chosen + [(a, b)], cap)
        if isinstance(result, ArcSystem):
            chosen.append((a, b))
            system = result
    return system


def verify_system(dual: DualGraph, system: ArcSystem) -> None:
    """Raise :class:`InvalidSystem` unless ``system`` is a valid realization."""
    seen = set()
    for arc in system.arcs:
        a, b = arc.endpoints
        key = frozenset((a, b))
        if a == b or key in seen:
            raise InvalidSystem(f"repeated or degenerate pair {arc.endpoints}")
        seen.add(key)
        if any(frozenset((a, b)) == frozenset(pq) for pq in dual.edges.values()):
            raise InvalidSystem(f"faces {a} and {b} are adjacent")
        here = a
        for e, nxt in zip(arc.route, arc.faces[1:]):
            p, q = dual.edges.get(e, (None, None))
            if {here, nxt} != {p, q}:
                raise InvalidSystem(f"route {arc.route} is not a dual walk")
            here = nxt
        if arc.faces[0] != a or here != b:
            raise InvalidSystem(f"route {arc.route} does not join {a} and {b}")
        if dual_distances(dual, a)[b] != arc.punctures:
            raise InvalidSystem(f"route {arc.route} is not minimal")
    for e, order in system.edge_orders.items():
        arcs_on_e = sorted(i for i, arc in enumerate(system.arcs) if e in arc.route)
        if sorted(order) != arcs_on_e:
            raise InvalidSystem(f"edge {e} order {order} does not match the routes")
    if not _solve_with_fixed_orders(dual, system):
        raise InvalidSystem("stated edge orders force a crossing")


def _solve_with_fixed_orders(dual: DualGraph, system: ArcSystem) -> bool:
    chords = [_chords(arc) for arc in system.arcs]
    for i, j in combinations(range(len(system.arcs)), 2):
        try:
            fixed, links = _pair_constraints(dual, chords[i], chords[j])
        except _Conflict:
            return False

        def before(e):
            o = system.edge_orders[e]
            return o.index(i) < o.index(j)

        if any(before(e) != v for e, v in fixed):
            return False
        if any((before(e1) ^ before(e2)) != bool(p) for e1, e2, p in links):
            return False
    return True


# -- augmented links -----------------------------------------------------

@dataclass(frozen=True)
class AugmentedLink:
    base: LinkDiagram
    system: ArcSystem
    report: HypothesisReport

    @property
    def classification(self) -> list[str]:
        return [arc.kind for arc in self.system.arcs]

    @property
    def hyperbolic(self) -> bool:
        return self.report.passes

    def to_dict(self) -> dict:
        out = self.system.to_dict()
        out["certificate"] = {"hypotheses": self.report.to_dict(),
                              "hyperbolic": self.hyperbolic}
        return out


def build_augmented_link(d: LinkDiagram, system: ArcSystem,
                         report: HypothesisReport | None = None) -> AugmentedLink:
    """Attach the hyperbolicity certificate to a validated arc system."""
    report = check_hypotheses(d) if report is None else report
    if not report.passes:
        raise HypothesisFailure(report)
    verify_system(build_dual(build_faces(d)), system)
    return AugmentedLink(d, system, report)
