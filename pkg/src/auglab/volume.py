"""
Exact volume bookkeeping for generalized belted sums.

Volumes are kept as rational linear combinations of symbols: ``OCT``,
the volume of the regular ideal octahedron, and named link volumes
treated as opaque.  Gluing two links along ``n`` belts (``n >= 2``)
gives

    vol(L1 #_b L2) = vol(L1) + vol(L2) - 4 (n - 2) OCT,

so ``n = 2`` is the classical belted sum with no correction.  The
untwisted daisy chain with ``n`` belts carries the discarded volume
``4 (n - 2) OCT``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

__all__ = [
    "OCT",
    "OCT_VOLUME",
    "BORROMEAN",
    "VolumeError",
    "BadBeltParameter",
    "UnboundSymbol",
    "VolumeExpr",
    "Leaf",
    "Sum",
    "Offset",
    "v_oct",
    "borromean_rings",
    "belted_sum",
    "daisy_chain_volume",
    "evaluate",
    "leaf_bindings",
    "numeric",
    "node_from_json",
    "node_to_json",
]

OCT = "OCT"
OCT_VOLUME = 3.663862376708876
# Borromean rings complement: two regular ideal octahedra
BORROMEAN = "BORROMEAN"


class VolumeError(ValueError):
    pass


class BadBeltParameter(VolumeError):
    pass


class UnboundSymbol(VolumeError):
    def __init__(self, names):
        self.names = sorted(names)
        super().__init__("unbound volume symbols: " + ", ".join(self.names))


Number = Union[int, Fraction]


class VolumeExpr:
    """Immutable map from symbol name to a nonzero rational coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[str, Number] | None = None):
        clean = {}
        for name, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[str(name)] = c
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def symbol(cls, name: str) -> "VolumeExpr":
        return cls({name: 1})

    @property
    def terms(self) -> dict[str, Fraction]:
        return dict(self._terms)

    def coefficient(self, name: str) -> Fraction:
        return self._terms.get(name, Fraction(0))

    def symbols(self) -> set[str]:
        return set(self._terms)

    def __add__(self, other: "VolumeExpr") -> "VolumeExpr":
        if not isinstance(other, VolumeExpr):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return VolumeExpr(out)

    def __neg__(self) -> "VolumeExpr":
        return VolumeExpr({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "VolumeExpr") -> "VolumeExpr":
        if not isinstance(other, VolumeExpr):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k: Number) -> "VolumeExpr":
        if not isinstance(k, (int, Fraction)):
            return NotImplemented
        return VolumeExpr({name: c * k for name, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, VolumeExpr) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"VolumeExpr({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for name, c in self._terms.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}*"
            label = name if name == OCT else f"vol({name})"
            parts.append(f"{sign} {coef}{label}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json(self) -> list[dict]:
        return [{"symbol": k, "num": c.numerator, "den": c.denominator}
                for k, c in self._terms.items()]


def v_oct() -> tuple[VolumeExpr, float]:
    """The octahedron symbol together with its numeric value."""
    return VolumeExpr.symbol(OCT), OCT_VOLUME


def borromean_rings() -> VolumeExpr:
    return VolumeExpr({OCT: 2})


def belted_sum(v1: VolumeExpr, v2: VolumeExpr, n: int) -> VolumeExpr:
    if not isinstance(n, int) or n < 2:
        raise BadBeltParameter(f"belt parameter must be an integer >= 2, got {n!r}")
    return v1 + v2 - VolumeExpr({OCT: 4 * (n - 2)})


def daisy_chain_volume(n: int) -> VolumeExpr:
    if not isinstance(n, int) or n < 3:
        raise BadBeltParameter(f"daisy chain needs n >= 3, got {n!r}")
    return VolumeExpr({OCT: 4 * (n - 2)})


# -- expression trees ----------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    name: str
    volume: float | None = None


@dataclass(frozen=True)
class Sum:
    left: "Node"
    right: "Node"
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise BadBeltParameter(f"belt parameter must be an integer >= 2, got {self.n!r}")


@dataclass(frozen=True)
class Offset:
    node: "Node"
    expr: VolumeExpr


Node = Union[Leaf, Sum, Offset]


def evaluate(tree: Node) -> VolumeExpr:
    """Fold a belted-sum tree into one expression.

    Leaves always stay symbolic; their numeric volumes, if any, are
    collected separately by :func:`leaf_bindings`.
    """
    if isinstance(tree, Leaf):
        return VolumeExpr.symbol(tree.name)
    if isinstance(tree, Sum):
        return belted_sum(evaluate(tree.left), evaluate(tree.right), tree.n)
    if isinstance(tree, Offset):
        return evaluate(tree.node) + tree.expr
    raise TypeError(f"not a belted-sum node: {tree!r}")


def leaf_bindings(tree: Node) -> dict[str, float]:
    out: dict[str, float] = {}
    stack = [tree]
    while stack:
        t = stack.pop()
        if isinstance(t, Leaf):
            if t.volume is not None:
                if t.name in out and out[t.name] != t.volume:
                    raise VolumeError(f"leaf {t.name} bound to two volumes")
                out[t.name] = float(t.volume)
        elif isinstance(t, Sum):
            stack += [t.right, t.left]
        elif isinstance(t, Offset):
            stack.append(t.node)
    return out


def numeric(expr: VolumeExpr, bindings: Mapping[str, float] | None = None) -> float:
    """Substitute ``OCT`` and the given named volumes."""
    values = {OCT: OCT_VOLUME, **(bindings or {})}
    missing = expr.symbols() - values.keys()
    if missing:
        raise UnboundSymbol(missing)
    return math.fsum(float(c) * values[k] for k, c in expr.terms.items())


# -- JSON ----------------------------------------------------------------

def node_from_json(obj) -> Node:
    """Parse ``{"leaf": ...}``, ``{"sum": ...}`` or ``{"offset": ...}`` objects."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or len(obj) != 1:
        raise VolumeError(f"expected a single-key node object, got {obj!r}")
    (kind, body), = obj.items()
    if kind == "leaf":
        return Leaf(str(body["name"]), body.get("volume"))
    if kind == "sum":
        return Sum(node_from_json(body["left"]), node_from_json(body["right"]), body["n"])
    if kind == "offset":
        terms: dict[str, Fraction] = {}
        for t in body.get("terms", []):
            c = Fraction(int(t["num"]), int(t.get("den", 1)))
            terms[t["symbol"]] = terms.get(t["symbol"], 0) + c
        return Offset(node_from_json(body["node"]), VolumeExpr(terms))
    raise VolumeError(f"unknown node kind {kind!r}")


def node_to_json(tree: Node) -> dict:
    if isinstance(tree, Leaf):
        body = {"name": tree.name}
        if tree.volume is not None:
            body["volume"] = tree.volume
        return {"leaf": body}
    if isinstance(tree, Sum):
        return {"sum": {"left": node_to_json(tree.left),
                        "right": node_to_json(tree.right), "n": tree.n}}
    return {"offset": {"node": node_to_json(tree.node), "terms": tree.expr.to_json()}}
