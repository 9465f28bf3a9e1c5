"""Incidence colorings.

An incidence of X is a pair (u, e) with u an endpoint of the edge e.  A
coloring is proper when the two incidences of every edge get different
colors and the incidences at a common vertex are pairwise different.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .errors import InputError
from .graph import Edge, Graph, _edge, max_degree, wall, wall_coordinates
from .labels import Label, parse_label

Incidence = Tuple[Label, Edge]


@dataclass(frozen=True)
class IncidenceColoring:
    colors: Dict[Incidence, int]
    kappa: int

    def __post_init__(self):
        if self.kappa < 1:
            raise InputError("kappa must be positive")
        for inc, c in self.colors.items():
            if not 1 <= c <= self.kappa:
                raise InputError(f"color {c} of {inc} outside 1..{self.kappa}")

    def color(self, u: Label, v: Label) -> int:
        """The color of the incidence (u, uv)."""
        return self.colors[(u, _edge(u, v))]

    def used(self) -> set:
        return set(self.colors.values())

    def to_records(self, X: Graph) -> List[dict]:
        return [
            {"vertex": str(u), "edge": [str(e[0]), str(e[1])], "color": self.colors[(u, e)]}
            for u, e in incidences(X)
        ]

    @classmethod
    def from_records(cls, records, kappa: int) -> "IncidenceColoring":
        colors = {}
        for rec in records:
            u = parse_label(rec["vertex"])
            a, b = (parse_label(x) for x in rec["edge"])
            colors[(u, _edge(a, b))] = int(rec["color"])
        return cls(colors, kappa)


def incidences(X: Graph) -> List[Incidence]:
    """Inc(X) in (vertex order, then edge order)."""
    index = X.index
    out = []
    for u in X.vertices:
        incident = sorted((_edge(u, w) for w in X.neighbors(u)),
                          key=lambda e: (index[e[0]], index[e[1]]))
        out.extend((u, e) for e in incident)
    return out


def is_proper(X: Graph, phi: IncidenceColoring) -> bool:
    domain = incidences(X)
    if set(domain) != set(phi.colors):
        missing = set(domain) - set(phi.colors)
        raise InputError(f"coloring is not total on Inc(X); e.g. missing {next(iter(missing), None)}")
    for u, v in X.edges:
        if phi.color(u, v) == phi.color(v, u):
            return False
    for u in X.vertices:
        at_u = [phi.color(u, w) for w in X.neighbors(u)]
        if len(set(at_u)) != len(at_u):
            return False
    return True


def greedy_coloring(X: Graph) -> IncidenceColoring:
    """Lowest legal color, scanning incidences in deterministic order.

    An incidence (u, uv) sees at most deg(u) - 1 colors at u and one at the
    other end, so the palette [max_degree + 1] always suffices; ``kappa`` is
    set to that palette size even when fewer colors end up used.
    """
    colors: Dict[Incidence, int] = {}
    for u, e in incidences(X):
        v = e[1] if e[0] == u else e[0]
        blocked = {colors.get((u, _edge(u, w))) for w in X.neighbors(u)}
        blocked.add(colors.get((v, e)))
        c = 1
        while c in blocked:
            c += 1
        colors[(u, e)] = c
    kappa = max_degree(X) + 1
    return IncidenceColoring(colors, kappa)


# colors (left, right, vertical) at a wall vertex, keyed by (a + b) % 2;
# even vertices have their vertical edge going down, odd ones going up
_WALL_PATTERN = {0: (1, 2, 3), 1: (3, 2, 1)}


def wall_3_coloring(n: int) -> IncidenceColoring:
    """Proper 3-coloring of Inc(wall(n)) with period 2 in both directions."""
    X = wall(n)
    colors = {}
    for u in X.vertices:
        a, b = wall_coordinates(n, u)
        left, right, vertical = _WALL_PATTERN[(a + b) % 2]
        for w in X.neighbors(u):
            c, d = wall_coordinates(n, w)
            if c != a:
                colors[(u, _edge(u, w))] = vertical
            elif d < b:
                colors[(u, _edge(u, w))] = left
            else:
                colors[(u, _edge(u, w))] = right
    return IncidenceColoring(colors, 3)

