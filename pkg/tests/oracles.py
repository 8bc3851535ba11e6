"""Brute-force reference computations, independent of the package internals.

Only raw PD tuples and the public data carriers are used here; nothing
calls the package's own face, cut, routing or constraint logic.
"""

import itertools
import math

import numpy as np


def label_positions(crossings):
    where = {}
    for c, x in enumerate(crossings):
        for s, a in enumerate(x):
            where.setdefault(a, []).append((c, s))
    return where


def strand_passages(crossings):
    """Over/under sequence of each strand, read straight off the slots."""
    where = label_positions(crossings)
    seen = set()
    out = []
    for c0, x in enumerate(crossings):
        for s0 in range(4):
            if (c0, s0) in seen:
                continue
            seq = []
            c, s = c0, s0
            while (c, s) not in seen:
                seen.add((c, s))
                seen.add((c, (s + 2) % 4))
                seq.append("U" if s % 2 == 0 else "O")
                a = crossings[c][(s + 2) % 4]
                p, q = where[a]
                c, s = q if p == (c, (s + 2) % 4) else p
            out.append(seq)
    return out


def alternating_by_traversal(crossings):
    for seq in strand_passages(crossings):
        if any(seq[i] == seq[(i + 1) % len(seq)] for i in range(len(seq))):
            return False
    return True


def face_sizes_ccw(crossings):
    """Face census using the mirror traversal rule (rotate counterclockwise)."""
    where = label_positions(crossings)
    seen = set()
    sizes = []
    for c0 in range(len(crossings)):
        for s0 in range(4):
            if (c0, s0) in seen:
                continue
            n = 0
            c, s = c0, s0
            while (c, s) not in seen:
                seen.add((c, s))
                n += 1
                p, q = where[crossings[c][s]]
                c, s = q if p == (c, s) else p
                s = (s + 1) % 4
            sizes.append(n)
    return sorted(sizes)


def pieces(crossings, removed=()):
    """Connected components of crossings after deleting the given edges."""
    adj = {c: set() for c in range(len(crossings))}
    for a, ends in label_positions(crossings).items():
        if a in removed:
            continue
        (c1, _), (c2, _) = ends
        adj[c1].add(c2)
        adj[c2].add(c1)
    comps, seen = [], set()
    for c in adj:
        if c in seen:
            continue
        stack, comp = [c], set()
        while stack:
            u = stack.pop()
            if u in comp:
                continue
            comp.add(u)
            stack.extend(adj[u] - comp)
        seen |= comp
        comps.append(comp)
    return comps


def two_edge_cuts(crossings):
    """Every edge pair whose removal leaves crossings on both sides."""
    labels = sorted(label_positions(crossings))
    base = len(pieces(crossings))
    return [(a, b) for a, b in itertools.combinations(labels, 2)
            if len(pieces(crossings, {a, b})) > base]


def corner_faces(crossings, face_of):
    """Table crossing -> four corner faces, from a dart->face map."""
    return {c: [face_of[(c, s)] for s in range(4)] for c in range(len(crossings))}


def floyd_warshall(n, edges):
    inf = math.inf
    dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for p, q in edges:
        if p != q:
            dist[p][q] = dist[q][p] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if dist[i][k] + dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] + dist[k][j]
    return dist


def all_routes(edge_sides, a, b, length):
    """All walks a -> b crossing ``length`` edges and visiting no face twice."""
    out = []

    def walk(u, labels, faces):
        if len(labels) == length:
            if u == b:
                out.append(tuple(labels))
            return
        for e, (p, q) in sorted(edge_sides.items()):
            if u in (p, q):
                w = q if u == p else p
                if w not in faces:
                    walk(w, labels + [e], faces | {w})

    walk(a, [], {a})
    return sorted(out)


def lobachevsky(theta, terms=200_000):
    """Lobachevsky function from its Fourier series, 1/2 sum sin(2k theta)/k^2.

    The mean of two consecutive partial sums is returned, which is exact
    to rounding for the alternating case theta = pi/4.
    """
    k = np.arange(1, terms + 2, dtype=np.float64)
    parts = np.sin(2 * k * theta) / k ** 2
    s1 = math.fsum(parts[:-1])
    s2 = s1 + parts[-1]
    return float(0.5 * (s1 + s2) / 2)


# -- geometric planarity check -------------------------------------------

def _segments_cross(p1, p2, p3, p4):
    def orient(a, b, c):
        return np.sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))
    o1, o2 = orient(p1, p2, p3), orient(p1, p2, p4)
    o3, o4 = orient(p3, p4, p1), orient(p3, p4, p2)
    return o1 * o2 < 0 and o3 * o4 < 0


def polyline_crossings(diagram, facemap, arcs, edge_orders, spur=1e-6):
    """Count crossings between different arcs drawn with straight segments.

    Each face is the unit disk with its boundary edges laid out as
    consecutive circular sides in traversal order; the points where arcs
    meet an edge are spaced evenly along that side, in ``edge_orders``
    order measured from the edge's lower dart (reversed on the face that
    runs the other way).  An arc's end is a short radial spur into the
    face from its last boundary point.
    """
    lower = {a: min(ds) for a, ds in label_positions(diagram.crossings).items()}
    count = 0
    for fi, face in enumerate(facemap.faces):
        k = len(face.darts)
        coords = {}
        for j, dart in enumerate(face.darts):
            e = diagram.crossings[dart[0]][dart[1]]
            order = list(edge_orders.get(e, ()))
            forward = tuple(dart) == lower[e]
            seq = order if forward else order[::-1]
            for t, arc_id in enumerate(seq):
                ang = 2 * math.pi * (j + (t + 1) / (len(seq) + 1)) / k
                coords[arc_id, e] = np.array([math.cos(ang), math.sin(ang)])
        segs = []
        for i, arc in enumerate(arcs):
            if fi not in arc.faces:
                continue
            pos = arc.faces.index(fi)
            touching = []
            if pos > 0:
                touching.append(arc.route[pos - 1])
            if pos < len(arc.route):
                touching.append(arc.route[pos])
            pts = [coords[i, e] for e in touching]
            if len(pts) == 1:
                pts.append(pts[0] * (1 - spur))
            segs.append((i, pts[0], pts[1]))
        for (i, a1, a2), (j, b1, b2) in itertools.combinations(segs, 2):
            if i != j and _segments_cross(a1, a2, b1, b2):
                count += 1
    return count


def edge_sides(facemap, diagram):
    """Edge label -> the two faces it separates, read from face boundaries."""
    sides = {}
    for fi, face in enumerate(facemap.faces):
        for dart in face.darts:
            sides.setdefault(diagram.crossings[dart[0]][dart[1]], []).append(fi)
    return {e: tuple(fs) for e, fs in sides.items()}


class _Arc:
    def __init__(self, route, faces):
        self.route, self.faces = tuple(route), tuple(faces)


def arc_from_route(sides, start, route):
    faces = [start]
    for e in route:
        p, q = sides[e]
        faces.append(q if faces[-1] == p else p)
    return _Arc(route, faces)


def every_drawing_crosses(diagram, facemap, pairs):
    """Exhaust all shortest routes and per-edge orders; True if every drawing crosses."""
    sides = edge_sides(facemap, diagram)
    dist = floyd_warshall(len(facemap.faces), sides.values())
    route_sets = [[arc_from_route(sides, a, r) for r in all_routes(sides, a, b, dist[a][b])]
                  for a, b in pairs]
    for combo in itertools.product(*route_sets):
        on_edge = {}
        for i, arc in enumerate(combo):
            for e in arc.route:
                on_edge.setdefault(e, []).append(i)
        edges = sorted(on_edge)
        for perms in itertools.product(*(itertools.permutations(on_edge[e]) for e in edges)):
            if polyline_crossings(diagram, facemap, combo, dict(zip(edges, perms))) == 0:
                return False
    return True
