"""
Planar diagram (PD) codes as 4-regular plane graphs.

Each crossing is a 4-tuple of edge labels listed counterclockwise,
starting with the incoming understrand.  Slots 0 and 2 are therefore the
understrand and slots 1 and 3 the overstrand.  A *dart* is one end of an
edge, named by ``(crossing, slot)``.

Faces are the orbits of the permutation

    next(d) = rotate co-dart(d) one step clockwise at its crossing,

i.e. ``(c, s) -> (c', s' - 1)`` where ``(c', s')`` is the other end of
the edge at ``(c, s)``.  With this convention the dart ``(c, s)`` stands
for the corner of crossing ``c`` between slots ``s`` and ``s + 1``, and a
face boundary is read off as the edges of its darts, each traversed away
from the dart's crossing.  The mirror convention gives the same census.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

__all__ = [
    "Dart",
    "LinkDiagram",
    "Face",
    "FaceMap",
    "DiagramError",
    "MalformedSyntax",
    "BadEdgeMultiplicity",
    "EmptyDiagram",
    "NonPlanarDiagram",
    "parse_pd",
    "read_pd_file",
    "serialize",
    "canonicalize",
    "build_faces",
    "is_alternating",
    "alternation_defect",
    "projection_components",
    "crossing_components",
    "mirror",
]


class DiagramError(ValueError):
    """Base class for PD parsing and validation errors."""


class MalformedSyntax(DiagramError):
    pass


class BadEdgeMultiplicity(DiagramError):
    pass


class EmptyDiagram(DiagramError):
    pass


class NonPlanarDiagram(DiagramError):
    """The gluing of crossings does not lie on a sphere (or union of spheres)."""


class Dart(NamedTuple):
    crossing: int
    slot: int

    def rotate(self, k: int = 1) -> "Dart":
        """Rotate ``k`` slots counterclockwise (negative ``k`` is clockwise)."""
        return Dart(self.crossing, (self.slot + k) % 4)

    @property
    def is_under(self) -> bool:
        return self.slot % 2 == 0


@dataclass(frozen=True)
class LinkDiagram:
    """An unoriented link projection with over/under data.

    ``crossings`` is kept in input order.  Construction validates edge
    multiplicity and planarity; build instances with :func:`parse_pd` or
    directly from a list of 4-tuples.
    """

    crossings: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        xs = tuple(tuple(int(a) for a in x) for x in self.crossings)
        object.__setattr__(self, "crossings", xs)
        if not xs:
            raise EmptyDiagram("diagram has no crossings")
        for x in xs:
            if len(x) != 4:
                raise MalformedSyntax(f"crossing {x} does not have 4 entries")
            if any(a <= 0 for a in x):
                raise MalformedSyntax(f"crossing {x} has a non-positive label")
        counts: dict[int, int] = {}
        for x in xs:
            for a in x:
                counts[a] = counts.get(a, 0) + 1
        bad = sorted(a for a, n in counts.items() if n != 2)
        if bad:
            raise BadEdgeMultiplicity(
                "labels not appearing exactly twice: " + ", ".join(map(str, bad)))
        # V - E + F = 2 per connected piece of the projection graph
        f = len(_face_orbits(self))
        k = len(crossing_components(self))
        if f - len(xs) != 2 * k:
            raise NonPlanarDiagram(
                f"{len(xs)} crossings, {f} faces, {k} pieces: not a sphere map")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    @cached_property
    def edges(self) -> tuple[int, ...]:
        """Edge labels in first-appearance order."""
        seen: dict[int, None] = {}
        for x in self.crossings:
            for a in x:
                seen.setdefault(a)
        return tuple(seen)

    @cached_property
    def edge_darts(self) -> dict[int, tuple[Dart, Dart]]:
        """Both ends of every edge, lower dart first."""
        ends: dict[int, list[Dart]] = {}
        for c, x in enumerate(self.crossings):
            for s, a in enumerate(x):
                ends.setdefault(a, []).append(Dart(c, s))
        return {a: (d[0], d[1]) for a, d in ends.items()}

    def label(self, d: Dart) -> int:
        return self.crossings[d.crossing][d.slot]

    def opposite(self, d: Dart) -> Dart:
        """The other end of the edge at ``d``."""
        a, b = self.edge_darts[self.label(d)]
        return b if d == a else a

    def darts(self) -> Iterable[Dart]:
        for c in range(len(self.crossings)):
            for s in range(4):
                yield Dart(c, s)

    @cached_property
    def strands(self) -> tuple[tuple[Dart, ...], ...]:
        """Closed strands as cyclic sequences of *entry* darts.

        A strand enters a crossing at a dart and leaves through the
        diagonally opposite slot.  Each strand is traversed starting at
        its first incoming understrand slot 0 (or its lowest dart when it
        never passes under anything), so under passages run 0 -> 2.
        """
        seen: set[Dart] = set()
        out = []
        starts = [Dart(c, 0) for c in range(len(self.crossings))]
        starts += list(self.darts())
        for start in starts:
            if start in seen:
                continue
            seq = []
            d = start
            while True:
                seq.append(d)
                seen.add(d)
                seen.add(d.rotate(2))
                d = self.opposite(d.rotate(2))
                if d == start:
                    break
            out.append(tuple(seq))
        return tuple(out)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Partition of edge labels into link components, in traversal order."""
        return tuple(
            tuple(self.label(d.rotate(2)) for d in strand) for strand in self.strands)

    def __str__(self) -> str:
        return serialize(self)


# -- parsing -------------------------------------------------------------

_CROSSING = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")


def _strip_comments(text: str) -> str:
    return "\n".join(
        line for line in text.splitlines() if not line.lstrip().startswith("#"))


def parse_pd(text: str) -> LinkDiagram:
    """Parse a PD string such as ``"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"``.

    Lines starting with ``#`` are comments.  Crossing order and labels are
    preserved exactly.
    """
    body = _strip_comments(text)
    crossings = []
    pos = 0
    while True:
        m = re.compile(r"\s*").match(body, pos)
        pos = m.end()
        if pos == len(body):
            break
        m = _CROSSING.match(body, pos)
        if m is None:
            snippet = body[pos:pos + 20]
            raise MalformedSyntax(f"expected X(a,b,c,d) at offset {pos}: {snippet!r}")
        crossings.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
        if pos < len(body) and not body[pos].isspace():
            raise MalformedSyntax(f"expected whitespace at offset {pos}")
    if not crossings:
        raise EmptyDiagram("no crossings found")
    return LinkDiagram(tuple(crossings))


def read_pd_file(path) -> list[LinkDiagram]:
    """Read a file holding one diagram per non-comment line."""
    with open(path, encoding="utf-8") as fh:
        text = _strip_comments(fh.read())
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise EmptyDiagram(f"{path}: no diagram")
    return [parse_pd(line) for line in lines]


def serialize(d: LinkDiagram) -> str:
    return " ".join("X({},{},{},{})".format(*x) for x in d.crossings)


def canonicalize(d: LinkDiagram) -> LinkDiagram:
    """Relabel edges 1..2C in first-appearance order."""
    relabel = {a: i + 1 for i, a in enumerate(d.edges)}
    return LinkDiagram(tuple(tuple(relabel[a] for a in x) for x in d.crossings))


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Reverse every crossing tuple.

    This reflects the projection plane and swaps the over/under roles at
    every crossing; all checks in this package are invariant under it.
    """
    return LinkDiagram(tuple(tuple(reversed(x)) for x in d.crossings))


# -- faces ---------------------------------------------------------------

@dataclass(frozen=True)
class Face:
    """A complementary region, as the cyclic sequence of its darts.

    The boundary is the sequence of edges ``label(d)`` for ``d`` in
    ``darts``, each traversed from ``d``'s crossing to the far end.
    """

    darts: tuple[Dart, ...]
    edges: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class FaceMap:
    faces: tuple[Face, ...]
    dart_to_face: dict[Dart, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.faces)

    def face_of(self, d: Dart) -> int:
        return self.dart_to_face[d]

    def sizes(self) -> list[int]:
        return [f.size for f in self.faces]

    def corner_face(self, crossing: int, slot: int) -> int:
        """Face at the corner between ``slot`` and ``slot + 1``."""
        return self.dart_to_face[Dart(crossing, slot % 4)]


def _next_dart(d: LinkDiagram, dart: Dart) -> Dart:
    return d.opposite(dart).rotate(-1)


def _face_orbits(d: LinkDiagram) -> list[list[Dart]]:
    seen: set[Dart] = set()
    orbits = []
    for start in d.darts():
        if start in seen:
            continue
        orbit = []
        x = start
        while x not in seen:
            seen.add(x)
            orbit.append(x)
            x = _next_dart(d, x)
        orbits.append(orbit)
    return orbits


def build_faces(d: LinkDiagram) -> FaceMap:
    """Complementary regions, indexed in traversal order.

    Face ``i`` is the ``i``-th orbit discovered while scanning darts
    ``(0,0), (0,1), ...``; each orbit starts at its lowest dart.
    """
    faces = []
    dart_to_face = {}
    for i, orbit in enumerate(_face_orbits(d)):
        faces.append(Face(tuple(orbit), tuple(d.label(x) for x in orbit)))
        for x in orbit:
            dart_to_face[x] = i
    return FaceMap(tuple(faces), dart_to_face)


# -- alternation and connectivity ----------------------------------------

def alternation_defect(d: LinkDiagram) -> int | None:
    """Return an edge whose two ends are both under or both over, else None."""
    for a in d.edges:
        x, y = d.edge_darts[a]
        if x.is_under == y.is_under:
            return a
    return None


def is_alternating(d: LinkDiagram) -> bool:
    # strands alternate iff every edge joins an under slot to an over slot
    return alternation_defect(d) is None


def crossing_components(d: LinkDiagram) -> list[list[int]]:
    """Connected pieces of the projection graph, as sorted crossing lists."""
    parent = list(range(len(d.crossings)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    ends: dict[int, int] = {}
    for c, x in enumerate(d.crossings):
        for a in x:
            if a in ends:
                parent[find(c)] = find(ends[a])
            else:
                ends[a] = c
    groups: dict[int, list[int]] = {}
    for c in range(len(d.crossings)):
        groups.setdefault(find(c), []).append(c)
    return sorted(groups.values())


def projection_components(d: LinkDiagram) -> int:
    return len(crossing_components(d))
