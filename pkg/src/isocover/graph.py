"""Immutable simple graphs, distances, subdivisions and generators."""
from __future__ import annotations

from typing import Dict, Iterable, Optional, Tuple

from . import kernels
from .errors import DomainError, InputError
from .labels import Label, Original, Subdiv, sort_key, sorted_labels

Edge = Tuple[Label, Label]
# source edge (u, v) of X -> internal path [s_1, ..., s_c] from u to v
SubdivisionMap = Dict[Edge, Tuple[Label, ...]]


def _edge(u, v) -> Edge:
    return (u, v) if sort_key(u) <= sort_key(v) else (v, u)


class Graph:
    """Simple undirected graph over structured labels.

    Value semantics: two graphs are equal iff they have the same vertex and
    edge sets.  Nothing mutates a graph after ``__init__``; derived data
    (index, CSR arrays) is cached lazily.
    """

    __slots__ = ("_adj", "_vertices", "_edges", "_index", "_csr", "_hash")

    def __init__(self, vertices: Iterable[Label] = (), edges: Iterable[Edge] = ()):
        adj: Dict[Label, set] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at {u}")
            if u not in adj or v not in adj:
                missing = u if u not in adj else v
                raise InputError(f"edge endpoint {missing} is not a vertex")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}
        self._vertices = tuple(sorted_labels(self._adj))
        self._edges = None
        self._index = None
        self._csr = None
        self._hash = None

    @property
    def vertices(self) -> Tuple[Label, ...]:
        return self._vertices

    @property
    def edges(self) -> Tuple[Edge, ...]:
        if self._edges is None:
            index = self.index
            found = {_edge(u, v) for u in self._vertices for v in self._adj[u]}
            self._edges = tuple(sorted(found, key=lambda e: (index[e[0]], index[e[1]])))
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    @property
    def index(self) -> Dict[Label, int]:
        """Position of each vertex in the sorted vertex order."""
        if self._index is None:
            self._index = {v: i for i, v in enumerate(self._vertices)}
        return self._index

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self):
        return iter(self._vertices)

    def neighbors(self, v: Label) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise InputError(f"unknown vertex {v}") from None

    def degree(self, v: Label) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: Label, v: Label) -> bool:
        return u in self._adj and v in self._adj[u]

    def csr(self):
        """``(indptr, indices)`` over vertex positions, neighbours sorted."""
        if self._csr is None:
            index = self.index
            indptr = [0]
            indices = []
            for v in self._vertices:
                indices.extend(sorted(index[w] for w in self._adj[v]))
                indptr.append(len(indices))
            self._csr = (indptr, indices)
        return self._csr

    def bitmasks(self):
        index = self.index
        masks = []
        for v in self._vertices:
            mask = 0
            for w in self._adj[v]:
                mask |= 1 << index[w]
            masks.append(mask)
        return masks

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vertices, self.edges))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# --------------------------------------------------------------- distances


def _check_vertex(G: Graph, v: Label) -> None:
    if v not in G:
        raise InputError(f"unknown vertex {v}")


def bfs_from(G: Graph, sources: Iterable[Label]):
    """One distance row per source; ``-1`` marks unreachable."""
    index = G.index
    ids = []
    for s in sources:
        _check_vertex(G, s)
        ids.append(index[s])
    indptr, indices = G.csr()
    return kernels.bfs_many(indptr, indices, ids)


def distance(G: Graph, u: Label, v: Label) -> Optional[int]:
    """Number of edges on a shortest u-v path, or ``None`` if unreachable."""
    _check_vertex(G, v)
    (row,) = bfs_from(G, [u])
    d = row[G.index[v]]
    return None if d < 0 else d


def all_pairs_distances(G: Graph) -> Dict[Label, Dict[Label, int]]:
    """Distance table; unreachable pairs are absent from the inner dicts."""
    rows = bfs_from(G, G.vertices)
    table = {}
    for u, row in zip(G.vertices, rows):
        table[u] = {v: d for v, d in zip(G.vertices, row) if d >= 0}
    return table


def eccentricity(G: Graph, v: Label) -> Optional[int]:
    (row,) = bfs_from(G, [v])
    if min(row) < 0:
        return None
    return max(row)


def radius(G: Graph) -> int:
    if G.n == 0:
        raise DomainError("radius of the empty graph is undefined")
    rows = bfs_from(G, G.vertices)
    if min(rows[0]) < 0:
        raise DomainError("radius is undefined for a disconnected graph")
    return min(max(row) for row in rows)


# ---------------------------------------------------------------- structure


def induced_subgraph(G: Graph, S: Iterable[Label]) -> Graph:
    S = set(S)
    for v in S:
        _check_vertex(G, v)
    edges = [(u, w) for u in S for w in G.neighbors(u) if w in S and sort_key(u) < sort_key(w)]
    return Graph(S, edges)


def components(G: Graph) -> list:
    """Connected components as frozensets, ordered by their least vertex."""
    seen = set()
    comps = []
    for v in G.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in G.neighbors(x):
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(G: Graph) -> bool:
    # the empty graph is not considered connected
    return G.n > 0 and len(components(G)) == 1


def is_tree(G: Graph) -> bool:
    return is_connected(G) and G.m == G.n - 1


def max_degree(G: Graph) -> int:
    return max((G.degree(v) for v in G.vertices), default=0)


def remove_vertex(G: Graph, v: Label) -> Graph:
    _check_vertex(G, v)
    return induced_subgraph(G, [w for w in G.vertices if w != v])


def remove_edge(G: Graph, u: Label, v: Label) -> Graph:
    if not G.has_edge(u, v):
        raise InputError(f"{u}{v} is not an edge")
    drop = _edge(u, v)
    return Graph(G.vertices, [e for e in G.edges if e != drop])


def add_edges(G: Graph, edges: Iterable[Edge], vertices: Iterable[Label] = ()) -> Graph:
    return Graph(list(G.vertices) + list(vertices), list(G.edges) + list(edges))


# -------------------------------------------------------------- subdivision


def subdivide_edge(G: Graph, e: Edge, c: int) -> Graph:
    """Replace ``e = (u, v)`` by the path u, s_1, ..., s_c, v."""
    u, v = e
    if not G.has_edge(u, v):
        raise InputError(f"{u}{v} is not an edge")
    if c < 1:
        raise InputError("subdivision count must be at least 1")
    fresh = [Subdiv((u, v), i) for i in range(1, c + 1)]
    if any(s in G for s in fresh):
        raise InputError(f"subdivision labels for {u}{v} already in use")
    chain = [u, *fresh, v]
    drop = _edge(u, v)
    edges = [f for f in G.edges if f != drop]
    edges.extend(zip(chain, chain[1:]))
    return Graph(list(G.vertices) + fresh, edges)


def subdivide_all(G: Graph, c) -> Tuple[Graph, SubdivisionMap]:
    """Subdivide every edge; ``c`` is an int or a callable ``edge -> int``.

    Edges are oriented by label order, so index 1 always sits next to the
    smaller endpoint.
    """
    count = c if callable(c) else (lambda e: c)
    vertices = list(G.vertices)
    edges = []
    mapping: SubdivisionMap = {}
    for u, v in G.edges:
        k = count((u, v))
        if k < 1:
            raise InputError("subdivision count must be at least 1")
        internal = tuple(Subdiv((u, v), i) for i in range(1, k + 1))
        mapping[(u, v)] = internal
        vertices.extend(internal)
        chain = [u, *internal, v]
        edges.extend(zip(chain, chain[1:]))
    return Graph(vertices, edges), mapping


# --------------------------------------------------------------- generators


def _positive(**params):
    for name, value in params.items():
        if not isinstance(value, int) or value < 1:
            raise InputError(f"{name} must be a positive integer, got {value!r}")


def path(n: int) -> Graph:
    _positive(n=n)
    vs = [Original(i) for i in range(n)]
    return Graph(vs, zip(vs, vs[1:]))


def cycle(n: int) -> Graph:
    if not isinstance(n, int) or n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    vs = [Original(i) for i in range(n)]
    return Graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def star(delta: int) -> Graph:
    """Star with ``delta`` leaves around ``Original(0)``."""
    _positive(delta=delta)
    vs = [Original(i) for i in range(delta + 1)]
    return Graph(vs, [(vs[0], leaf) for leaf in vs[1:]])


def subdivided_star(delta: int) -> Graph:
    """The star with ``delta`` leaves, every edge subdivided once."""
    return subdivide_all(star(delta), 1)[0]


def complete(k: int) -> Graph:
    _positive(k=k)
    vs = [Original(i) for i in range(k)]
    return Graph(vs, [(vs[i], vs[j]) for i in range(k) for j in range(i + 1, k)])


def petersen() -> Graph:
    vs = [Original(i) for i in range(10)]
    outer = [(vs[i], vs[(i + 1) % 5]) for i in range(5)]
    spokes = [(vs[i], vs[i + 5]) for i in range(5)]
    inner = [(vs[5 + i], vs[5 + (i + 2) % 5]) for i in range(5)]
    return Graph(vs, outer + spokes + inner)


def grid_vertex(m: int, a: int, b: int) -> Original:
    """Label of grid vertex (a, b), 1-based, in an n x m grid."""
    return Original((a - 1) * m + (b - 1))


def grid(n: int, m: int) -> Graph:
    _positive(n=n, m=m)
    vs = [grid_vertex(m, a, b) for a in range(1, n + 1) for b in range(1, m + 1)]
    edges = []
    for a in range(1, n + 1):
        for b in range(1, m + 1):
            if a < n:
                edges.append((grid_vertex(m, a, b), grid_vertex(m, a + 1, b)))
            if b < m:
                edges.append((grid_vertex(m, a, b), grid_vertex(m, a, b + 1)))
    return Graph(vs, edges)


def wall_vertex(n: int, a: int, b: int) -> Original:
    return grid_vertex(2 * n + 1, a, b)


def wall_coordinates(n: int, v: Original) -> Tuple[int, int]:
    a, b = divmod(v.id, 2 * n + 1)
    return a + 1, b + 1


def wall(n: int) -> Graph:
    """Wall of order n: the n x (2n+1) grid without the vertical edges
    (a, b)(a+1, b) where a and b have different parity."""
    _positive(n=n)
    G = grid(n, 2 * n + 1)
    width = 2 * n + 1
    keep = []
    for u, v in G.edges:
        (a, b), (c, d) = wall_coordinates(n, u), wall_coordinates(n, v)
        if c == a + 1 and a % 2 != b % 2:
            continue
        keep.append((u, v))
    assert len(G.vertices) == n * width
    return Graph(G.vertices, keep)


def is_wall_horizontal(n: int, e: Edge) -> bool:
    (a, _), (c, _) = (wall_coordinates(n, x) for x in e)
    return a == c
