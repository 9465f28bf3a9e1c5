"""Covers of subdivided graphs by few simple isometric subgraphs.

Every constructor returns a :class:`CoverCertificate`; the verifiers check
them without trusting anything computed here.

Notation in comments: an edge uv of the source graph X becomes the path
u s1 s2 ... sc v in G, with s1 next to u.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .errors import DomainError, InputError
from .graph import (
    Graph, SubdivisionMap, _edge, add_edges, components, induced_subgraph, is_connected,
    is_wall_horizontal, max_degree, subdivide_all, wall, wall_coordinates,
)
from .incidence import IncidenceColoring, is_proper
from .labels import Apex, Label, Subdiv, sort_key, sorted_labels

TREE = "tree-radius-2"
APEX_P3 = "apex-P3"
APEX_P5 = "apex-P5"


def apex_star(delta: int) -> str:
    return f"apex-star({delta})"


@dataclass(frozen=True)
class Part:
    vertices: Tuple[Label, ...]
    role: str
    apex: Optional[Label] = None
    radius: Optional[int] = None
    # claimed exact pathwidth of every apex-plus-component piece, which also
    # fixes the pathwidth of the whole part (see verify_piece_pathwidth)
    pathwidth: Optional[int] = None


@dataclass(frozen=True)
class CoverCertificate:
    graph: Graph
    source: Graph
    subdivision: SubdivisionMap
    parts: Tuple[Part, ...]
    family: str = ""


@dataclass(frozen=True)
class ApexSpec:
    V1: frozenset
    V2: frozenset = field(default_factory=frozenset)


def _part(vertices, role, apex, radius, pathwidth=None) -> Part:
    return Part(tuple(sorted_labels(set(vertices))), role, apex, radius, pathwidth)


def _check_source(X: Graph):
    if X.m == 0:
        raise DomainError("source graph has no edges to cover")
    if not is_connected(X):
        raise DomainError("source graph must be connected")


def build_tree_cover(X: Graph, phi: IncidenceColoring) -> CoverCertificate:
    """kappa + 1 trees of radius 2 covering a 5-subdivision of X plus apexes.

    For each edge uv: a_phi(u,uv) ~ s1, a_{kappa+1} ~ s3, a_phi(v,uv) ~ s5;
    {u, s1, s2} joins part phi(u,uv), {s2, s3, s4} part kappa+1 and
    {s4, s5, v} part phi(v,uv).
    """
    _check_source(X)
    if not is_proper(X, phi):
        raise DomainError("incidence coloring is not proper")
    kappa = phi.kappa
    Gp, mapping = subdivide_all(X, 5)
    apexes = [Apex(i) for i in range(1, kappa + 2)]
    members = {i: {apexes[i - 1]} for i in range(1, kappa + 2)}
    extra = []
    for (u, v), (s1, s2, s3, s4, s5) in mapping.items():
        cu, cv = phi.color(u, v), phi.color(v, u)
        extra += [(apexes[cu - 1], s1), (apexes[kappa], s3), (apexes[cv - 1], s5)]
        members[cu] |= {u, s1, s2}
        members[kappa + 1] |= {s2, s3, s4}
        members[cv] |= {s4, s5, v}
    G = add_edges(Gp, extra, apexes)
    parts = tuple(_part(members[i], TREE, apexes[i - 1], 2) for i in range(1, kappa + 2))
    return CoverCertificate(G, X, mapping, parts, "trees")


def build_from(Gprime: Graph, P: ApexSpec):
    """Add apexes a1, a2 with a_i adjacent to all of V_i.

    Returns ``(G, V1 + a1, V2 + a2)``.  Both induced parts have radius 1
    around their apex.
    """
    a1, a2 = Apex(1), Apex(2)
    if a1 in Gprime or a2 in Gprime:
        raise InputError("apex labels a1/a2 already used in the base graph")
    for V in (P.V1, P.V2):
        for v in V:
            if v not in Gprime:
                raise InputError(f"{v} is not a vertex of the base graph")
    extra = [(a1, v) for v in P.V1] + [(a2, v) for v in P.V2]
    G = add_edges(Gprime, extra, [a1, a2])
    return G, frozenset(P.V1) | {a1}, frozenset(P.V2) | {a2}


def build_two_cover(X: Graph) -> CoverCertificate:
    """An Apex(P3) part and an Apex(S_delta*) part covering a 5-subdivision.

    Per edge uv: {s2, s3, s4} go to V1 and {u, s1, s2, s4, s5, v} to V2, so
    G[V1] is a disjoint union of P3's and G[V2] of subdivided stars centred
    at the vertices of X.
    """
    _check_source(X)
    delta = max_degree(X)
    Gp, mapping = subdivide_all(X, 5)
    V1, V2 = set(), set()
    for (u, v), (s1, s2, s3, s4, s5) in mapping.items():
        V1 |= {s2, s3, s4}
        V2 |= {u, s1, s2, s4, s5, v}
    G, part1, part2 = build_from(Gp, ApexSpec(frozenset(V1), frozenset(V2)))
    parts = (
        _part(part1, APEX_P3, Apex(1), 1),
        _part(part2, apex_star(delta), Apex(2), 1),
    )
    return CoverCertificate(G, X, mapping, parts, "k2")


def build_three_cover_wall(n: int) -> CoverCertificate:
    """Two radius-2 trees and one Apex(P5) part covering a wall subdivision.

    Horizontal wall edges get 5 internal vertices, vertical ones 7.  Rows
    alternate a color c (1 in odd rows, 2 in even rows); tree parts are
    unions of 3-vertex segments hanging from a1 / a2 by their middle vertex,
    and part 3 collects one short path around each wall vertex.

    horizontal u..v (u left):  {u,s1,s2} -> c,  {s2,s3,s4} -> 3-c,
                               {s4,s5,v} -> part 3
    vertical t..w (t above):   {t,s1,s2} -> part 3,  {s2,s3,s4} -> c(w),
                               {s4,s5,s6} -> c(t),   {s6,s7,w} -> part 3

    Around a wall vertex v, part 3 holds the path s4 s5 v s1' s2' made of
    the end of v's left edge and the start of its vertical edge; a3 is
    joined to the two neighbours of v on that path.

    Wall vertices missing a left or vertical edge get a shorter path with a
    single a3-neighbour.  Each such path is closed into a cycle by a helper
    vertex z = s(a3,x,1) adjacent to a3 and to an end x of the path.  Since
    dist(a3, x) <= 2 already, z shortens no distance, and every piece of
    part 3 then has pathwidth exactly 2.
    """
    if not isinstance(n, int) or n < 1:
        raise InputError("wall order must be a positive integer")
    X = wall(n)
    Gp, mapping = subdivide_all(X, lambda e: 5 if is_wall_horizontal(n, e) else 7)
    a = {i: Apex(i) for i in (1, 2, 3)}
    members = {i: {a[i]} for i in (1, 2, 3)}
    extra = []

    def row_color(v):
        return 1 if wall_coordinates(n, v)[0] % 2 == 1 else 2

    def tree_segment(color, seg):
        members[color].update(seg)
        extra.append((a[color], seg[1]))

    def hub(s):
        # s is a neighbour of a wall vertex inside part 3
        members[3].add(s)
        extra.append((a[3], s))

    for (u, v), internal in mapping.items():
        if is_wall_horizontal(n, (u, v)):
            s1, s2, s3, s4, s5 = internal
            c = row_color(u)
            tree_segment(c, (u, s1, s2))
            tree_segment(3 - c, (s2, s3, s4))
            members[3].update((s4, v))
            hub(s5)
        else:
            t, w = u, v  # label order puts the upper vertex first
            s1, s2, s3, s4, s5, s6, s7 = internal
            members[3].update((t, s2))
            hub(s1)
            tree_segment(row_color(w), (s2, s3, s4))
            tree_segment(row_color(t), (s4, s5, s6))
            members[3].update((s6, w))
            hub(s7)
    G = add_edges(Gp, extra, list(a.values()))
    helpers = []
    for comp in components(induced_subgraph(G, members[3] - {a[3]})):
        hubs = [s for s in comp if G.has_edge(a[3], s)]
        if len(hubs) > 1:
            continue
        C = induced_subgraph(G, comp)
        ends = [s for s in C.vertices if C.degree(s) <= 1]
        x = min(ends, key=lambda s: (s in hubs, sort_key(s)))
        z = Subdiv((a[3], x), 1)
        helpers += [(a[3], z), (z, x)]
        members[3].add(z)
    G = add_edges(G, helpers, [z for _, z in helpers[::2]])
    parts = (
        _part(members[1], TREE, a[1], 2),
        _part(members[2], TREE, a[2], 2),
        _part(members[3], APEX_P5, a[3], 2, pathwidth=2),
    )
    return CoverCertificate(G, X, mapping, parts, "k3")


def parts_graphs(cert: CoverCertificate) -> List[Graph]:
    return [induced_subgraph(cert.graph, p.vertices) for p in cert.parts]
