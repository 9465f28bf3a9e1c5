"""Certificate-based checks of every claimed property.

Each ``verify_*`` function returns a :class:`CheckResult`, which is truthy
iff the check passed and otherwise carries a small witness (a vertex pair,
an uncovered edge, a chord, ...).  ``certify_*`` functions build a
certificate or raise :class:`CertificationError` with a witness.

Nothing here trusts the constructions: checks only look at the graph, the
vertex sets and the declared roles.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional

from .errors import CertificationError, InputError, SizeLimitError
from .graph import (
    Edge, Graph, SubdivisionMap, _edge, bfs_from, components, grid, grid_vertex,
    induced_subgraph, is_connected, is_tree, wall, wall_vertex,
)
from .labels import Label, sort_key, sorted_labels


@dataclass
class CheckResult:
    check: str
    passed: bool
    witness: object = None
    detail: str = ""

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        out = {"check": self.check, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.detail:
            out["detail"] = self.detail
        return out


def _jsonable(obj):
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj, key=str) if isinstance(obj, (set, frozenset)) else obj
        return [_jsonable(x) for x in items]
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    return str(obj)


def _ok(check, detail=""):
    return CheckResult(check, True, None, detail)


def _fail(check, witness, detail):
    return CheckResult(check, False, witness, detail)


# ---------------------------------------------------------------- isometry


def verify_isometric(G: Graph, S: Iterable[Label]) -> CheckResult:
    """dist_H(x, y) == dist_G(x, y) for all x, y in S, with H = G[S].

    One BFS per vertex of S in G and in H.
    """
    S = sorted_labels(set(S))
    if not S:
        return _fail("isometric", None, "empty vertex set")
    H = induced_subgraph(G, S)
    g_rows = bfs_from(G, S)
    h_rows = bfs_from(H, S)
    g_index, h_index = G.index, H.index
    for x, g_row, h_row in zip(S, g_rows, h_rows):
        for y in S:
            dh = h_row[h_index[y]]
            dg = g_row[g_index[y]]
            if dh < 0:
                return _fail("isometric", (x, y), f"{x} and {y} lie in different components of the part")
            if dh != dg:
                return _fail("isometric", (x, y), f"dist_H({x},{y}) = {dh} but dist_G = {dg}")
    return _ok("isometric")


# -------------------------------------------------------------- edge cover


def verify_edge_cover(G: Graph, parts) -> CheckResult:
    sets = [set(p) for p in parts]
    for u, v in G.edges:
        if not any(u in s and v in s for s in sets):
            return _fail("edge-cover", (u, v), f"edge {u}{v} lies in no part")
    return _ok("edge-cover")


# ------------------------------------------------------ induced subdivision


def verify_induced_subdivision(G: Graph, X: Graph, M: SubdivisionMap) -> CheckResult:
    """G contains the subdivision of X described by M as an induced subgraph.

    Original vertices of X keep their labels in G; M maps each edge (u, v)
    of X to the internal path from u to v.
    """
    check = "induced-subdivision"
    keyed = {}
    for (u, v), internal in M.items():
        keyed[_edge(u, v)] = (u, v, tuple(internal))
    for e in X.edges:
        if e not in keyed:
            raise InputError(f"subdivision map has no entry for edge {e[0]}{e[1]}")
    extra = set(keyed) - set(X.edges)
    if extra:
        e = next(iter(extra))
        return _fail(check, e, f"map entry {e[0]}{e[1]} is not an edge of the source graph")
    for v in X.vertices:
        if v not in G:
            return _fail(check, v, f"source vertex {v} is missing from the graph")
    owner: Dict[Label, Edge] = {v: None for v in X.vertices}
    allowed = set()
    for e in X.edges:
        u, v, internal = keyed[e]
        for s in internal:
            if s not in G:
                return _fail(check, s, f"internal vertex {s} is not in the graph")
            if s in owner:
                return _fail(check, s, f"vertex {s} is used twice by the subdivision")
            owner[s] = e
        chain = [u, *internal, v]
        for x, y in zip(chain, chain[1:]):
            if not G.has_edge(x, y):
                return _fail(check, (x, y), f"path edge {x}{y} of {u}{v} is missing")
            allowed.add(_edge(x, y))
    used = set(owner)
    for x in used:
        for y in G.neighbors(x):
            if y in used and _edge(x, y) not in allowed:
                return _fail(check, (x, y), f"chord {x}{y} breaks inducedness")
    return _ok(check)


# ----------------------------------------------------------- radius / trees


def verify_eccentricity(G: Graph, S, center: Label, r: int) -> CheckResult:
    """Every vertex of G[S] is within distance r of ``center`` inside G[S]."""
    S = set(S)
    if center not in S:
        return _fail("radius", center, f"center {center} is not in the part")
    H = induced_subgraph(G, S)
    (row,) = bfs_from(H, [center])
    for v, d in zip(H.vertices, row):
        if d < 0 or d > r:
            return _fail("radius", (center, v), f"{v} is at distance {'inf' if d < 0 else d} > {r} from {center}")
    return _ok("radius")


def verify_tree_radius(G: Graph, S, r: int, center: Label) -> CheckResult:
    S = set(S)
    if center not in S:
        raise InputError(f"center {center} is not in the part")
    H = induced_subgraph(G, S)
    if not is_tree(H):
        witness = _cycle_or_split(H)
        return _fail("tree-radius", witness, "part does not induce a tree")
    result = verify_eccentricity(G, S, center, r)
    return CheckResult("tree-radius", result.passed, result.witness, result.detail)


def _cycle_or_split(H: Graph):
    comps = components(H)
    if len(comps) != 1:
        return (min(comps[0], key=sort_key), min(comps[1], key=sort_key))
    # peel leaves; what remains lies on cycles
    degree = {v: H.degree(v) for v in H.vertices}
    alive = set(H.vertices)
    leaves = [v for v in alive if degree[v] <= 1]
    while leaves:
        v = leaves.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in H.neighbors(v):
            if w in alive:
                degree[w] -= 1
                if degree[w] == 1:
                    leaves.append(w)
    return tuple(sorted_labels(alive))


# -------------------------------------------------------------------- apex

_FAMILY = re.compile(r"^(?:P(\d+)|star\((\d+)\))$")


def parse_family(family: str):
    m = _FAMILY.match(family)
    if not m:
        raise InputError(f"unknown apex family {family!r}")
    if m.group(1):
        return "path", int(m.group(1))
    return "star", int(m.group(2))


def _embeds_in_path(C: Graph, k: int) -> bool:
    return is_tree(C) and C.n <= k and all(C.degree(v) <= 2 for v in C.vertices)


def _embeds_in_subdivided_star(C: Graph, delta: int) -> bool:
    if not is_tree(C):
        return False
    for c in C.vertices:
        if C.degree(c) > delta:
            continue
        (row,) = bfs_from(C, [c])
        if max(row) > 2:
            continue
        if all(C.degree(v) <= 2 for v in C.vertices if v != c):
            return True
    return False


def verify_apex(G: Graph, S, apex: Label, family: str) -> CheckResult:
    """G[S] minus ``apex`` has every component embeddable in the family graph.

    ``family`` is ``"P<k>"`` (path on k vertices) or ``"star(d)"`` (the star
    with d leaves, each edge subdivided once).
    """
    S = set(S)
    if apex not in S:
        raise InputError(f"apex {apex} is not in the part")
    kind, size = parse_family(family)
    rest = induced_subgraph(G, S - {apex})
    for comp in components(rest):
        C = induced_subgraph(rest, comp)
        ok = _embeds_in_path(C, size) if kind == "path" else _embeds_in_subdivided_star(C, size)
        if not ok:
            return _fail("apex", tuple(sorted_labels(comp)), f"component does not embed in {family}")
    return _ok("apex", family)


def verify_piece_pathwidth(G: Graph, S, apex: Label, p: int) -> CheckResult:
    """Every piece G[C + apex], C a component of G[S] - apex, has exact
    pathwidth p, and G[S] has a path decomposition of width <= p.

    The pieces are induced subgraphs, so together the two halves pin
    pw(G[S]) = p.  The decomposition puts the apex into every bag of the
    concatenated component decompositions.
    """
    from .widths import exact_pathwidth, verify_tree_decomposition, PathDecomposition

    check = "piece-pathwidth"
    S = set(S)
    if apex not in S:
        raise InputError(f"apex {apex} is not in the part")
    H = induced_subgraph(G, S)
    bags = []
    for comp in components(induced_subgraph(H, S - {apex})):
        width, _ = exact_pathwidth(induced_subgraph(H, comp | {apex}))
        if width != p:
            return _fail(check, tuple(sorted_labels(comp)), f"piece has pathwidth {width}, not {p}")
        _, D = exact_pathwidth(induced_subgraph(H, comp))
        bags.extend(bag | {apex} for bag in D.bags)
    D = PathDecomposition(tuple(bags) or (frozenset([apex]),))
    res = verify_tree_decomposition(H, D)
    if not res:
        return _fail(check, res.witness, f"assembled decomposition invalid: {res.detail}")
    if D.width > p:
        return _fail(check, apex, f"assembled decomposition has width {D.width} > {p}")
    return _ok(check, f"pw = {p}")


# -------------------------------------------------------- elimination trees


@dataclass(frozen=True)
class EliminationTree:
    """Rooted forest given by parent pointers; roots map to ``None``."""

    parent: Dict[Label, Optional[Label]]

    @property
    def depth(self) -> int:
        depth = {}
        for v in self.parent:
            chain = []
            x = v
            while x is not None and x not in depth:
                chain.append(x)
                x = self.parent[x]
                if len(chain) > len(self.parent):
                    raise CertificationError("parent pointers contain a cycle", v)
            base = 0 if x is None else depth[x]
            for y in reversed(chain):
                base += 1
                depth[y] = base
        return max(depth.values(), default=0)

    def ancestors(self, v: Label):
        x = self.parent[v]
        while x is not None:
            yield x
            x = self.parent[x]


def verify_elimination_tree(G: Graph, S, T: EliminationTree) -> CheckResult:
    check = "elimination-tree"
    S = set(S)
    if set(T.parent) != S:
        diff = set(T.parent) ^ S
        return _fail(check, tuple(sorted_labels(diff)), "forest does not span the part exactly")
    for v, p in T.parent.items():
        if p is not None and p not in S:
            return _fail(check, (v, p), f"parent {p} of {v} is outside the part")
    try:
        depth = T.depth
    except CertificationError as exc:
        return _fail(check, exc.witness, str(exc))
    H = induced_subgraph(G, S)
    for u, v in H.edges:
        if u not in set(T.ancestors(v)) and v not in set(T.ancestors(u)):
            return _fail(check, (u, v), f"edge {u}{v} joins two vertices that are not ancestor-related")
    return _ok(check, f"depth {depth}")


ROLE_DEPTH_BOUND = {"tree-radius-2": 3, "apex-P3": 3, "apex-P5": 4, "apex-star": 4}


def role_depth_bound(role: str) -> int:
    base = "apex-star" if role.startswith("apex-star") else role
    if base not in ROLE_DEPTH_BOUND:
        raise InputError(f"unknown role {role!r}")
    return ROLE_DEPTH_BOUND[base]


def _center(T: Graph) -> Label:
    rows = bfs_from(T, T.vertices)
    ecc = [max(row) for row in rows]
    best = min(ecc)
    return T.vertices[ecc.index(best)]


def certify_treedepth_ub(G: Graph, S, role: str, apex: Optional[Label] = None) -> EliminationTree:
    """Elimination forest: the apex (or tree center) on top, then each
    remaining component rooted at its center, recursively.

    Raises :class:`CertificationError` if a component below the apex is not
    a tree or the depth exceeds the role's bound.
    """
    bound = role_depth_bound(role)
    S = set(S)
    if not S:
        raise CertificationError("empty part", None)
    H = induced_subgraph(G, S)
    if apex is None:
        if not is_tree(H):
            raise CertificationError("part is not a tree", _cycle_or_split(H))
        apex = _center(H)
    if apex not in S:
        raise InputError(f"apex {apex} is not in the part")
    parent: Dict[Label, Optional[Label]] = {apex: None}
    stack = [(induced_subgraph(H, S - {apex}), apex)]
    while stack:
        F, above = stack.pop()
        for comp in components(F):
            C = induced_subgraph(F, comp)
            if not is_tree(C):
                raise CertificationError("component below the apex is not a tree", _cycle_or_split(C))
            root = _center(C)
            parent[root] = above
            stack.append((induced_subgraph(C, comp - {root}), root))
    T = EliminationTree(parent)
    if T.depth > bound:
        deepest = max(parent, key=lambda v: len(list(T.ancestors(v))))
        raise CertificationError(f"elimination depth {T.depth} exceeds {bound} for role {role}", deepest)
    return T


# ------------------------------------------------------------ minor models


@dataclass(frozen=True)
class MinorModel:
    branch_sets: Dict[Label, frozenset]
    witnesses: Dict[Edge, Edge] = field(default_factory=dict)


def verify_minor_model(G: Graph, pattern: Graph, M: MinorModel) -> CheckResult:
    check = "minor-model"
    if set(M.branch_sets) != set(pattern.vertices):
        return _fail(check, None, "branch sets do not match the pattern vertices")
    owner = {}
    for p in pattern.vertices:
        B = M.branch_sets[p]
        if not B:
            return _fail(check, p, f"branch set of {p} is empty")
        for v in B:
            if v not in G:
                return _fail(check, v, f"branch vertex {v} not in graph")
            if v in owner:
                return _fail(check, (owner[v], p), f"branch sets of {owner[v]} and {p} share {v}")
            owner[v] = p
        if not is_connected(induced_subgraph(G, B)):
            return _fail(check, p, f"branch set of {p} is not connected")
    witnesses = {_edge(*k): v for k, v in M.witnesses.items()}
    for p, q in pattern.edges:
        w = witnesses.get((p, q))
        if w is None:
            return _fail(check, (p, q), f"pattern edge {p}{q} has no witness")
        x, y = w
        if not G.has_edge(x, y):
            return _fail(check, (p, q), f"witness {x}{y} is not an edge")
        if {owner.get(x), owner.get(y)} != {p, q}:
            return _fail(check, (p, q), f"witness {x}{y} does not join the two branch sets")
    return _ok(check)


def contract_model(G: Graph, M: MinorModel) -> Graph:
    """Quotient of G on the branch sets (vertices outside all sets dropped)."""
    owner = {v: p for p, B in M.branch_sets.items() for v in B}
    edges = set()
    for u, v in G.edges:
        p, q = owner.get(u), owner.get(v)
        if p is not None and q is not None and p != q:
            edges.add(_edge(p, q))
    return Graph(M.branch_sets, edges)


def wall_grid_branches(n: int):
    """Wall vertices contracted onto grid vertex (a, j): row a, columns
    2j-1 and 2j, plus column 2n+1 for j = n."""
    out = {}
    for a in range(1, n + 1):
        for j in range(1, n + 1):
            cols = [2 * j - 1, 2 * j] + ([2 * n + 1] if j == n else [])
            out[(a, j)] = [wall_vertex(n, a, b) for b in cols if b <= 2 * n + 1]
    return out


def certify_tw_lower_bound(G: Graph, M: SubdivisionMap, n: int) -> MinorModel:
    """A grid(n, n) minor model in G, read off an induced wall subdivision."""
    X = wall(n)
    check = verify_induced_subdivision(G, X, M)
    if not check:
        raise CertificationError("subdivision map does not certify an induced wall", check.witness)
    paths = {_edge(u, v): (u, v, tuple(s)) for (u, v), s in M.items()}
    branches = wall_grid_branches(n)
    owner = {}
    sets = {}
    for (a, j), members in branches.items():
        p = grid_vertex(n, a, j)
        sets[p] = set(members)
        for v in members:
            owner[v] = p
    # internal paths of wall edges inside one branch set join that set
    for e, (u, v, internal) in paths.items():
        if owner[u] == owner[v]:
            sets[owner[u]].update(internal)
    pattern = grid(n, n)
    witnesses = {}
    for p, q in pattern.edges:
        for e, (u, v, internal) in sorted(paths.items(), key=lambda kv: (sort_key(kv[0][0]), sort_key(kv[0][1]))):
            if {owner[u], owner[v]} == {p, q}:
                # the internal path goes to u's branch set; last hop crosses
                sets[owner[u]].update(internal)
                chain = [u, *internal, v]
                witnesses[(p, q)] = (chain[-2], chain[-1])
                break
    return MinorModel({p: frozenset(B) for p, B in sets.items()}, witnesses)


# ------------------------------------------------------- certificate suite


def detect_wall_order(X: Graph) -> Optional[int]:
    n = 1
    while n * (2 * n + 1) < X.n:
        n += 1
    if n * (2 * n + 1) == X.n and X == wall(n):
        return n
    return None


def _role_check(G: Graph, part) -> CheckResult:
    role = part.role
    if part.apex is None:
        return _fail("role", role, f"role {role} needs an apex/center vertex")
    if part.apex not in set(part.vertices):
        return _fail("role", part.apex, f"apex {part.apex} is not in the part")
    if role == "tree-radius-2":
        return verify_tree_radius(G, part.vertices, 2, part.apex)
    if role == "apex-P3":
        return verify_apex(G, part.vertices, part.apex, "P3")
    if role == "apex-P5":
        return verify_apex(G, part.vertices, part.apex, "P5")
    m = re.match(r"^apex-star\((\d+)\)$", role)
    if m:
        return verify_apex(G, part.vertices, part.apex, f"star({m.group(1)})")
    return _fail("role", role, f"unknown role {role!r}")


def verify_certificate(cert) -> list:
    """Run every check on a cover certificate; returns the list of results."""
    G = cert.graph
    results = []
    if not cert.parts:
        results.append(_fail("parts", None, "certificate has no parts"))
        return results
    bad = [v for part in cert.parts for v in part.vertices if v not in G]
    if bad:
        results.append(_fail("parts", bad[0], f"part vertex {bad[0]} is not in the graph"))
        return results
    results.append(_ok("parts", f"{len(cert.parts)} parts"))
    for i, part in enumerate(cert.parts, start=1):
        tag = f"part {i} ({part.role})"

        def named(res, tag=tag):
            res.check = f"{tag}: {res.check}"
            return res

        S = set(part.vertices)
        if not S:
            results.append(named(_fail("nonempty", None, "part is empty")))
            continue
        H = induced_subgraph(G, S)
        results.append(named(_ok("connected") if is_connected(H)
                             else _fail("connected", _cycle_or_split(H), "part is disconnected")))
        results.append(named(verify_isometric(G, S)))
        try:
            results.append(named(_role_check(G, part)))
        except InputError as exc:
            results.append(named(_fail("role", part.apex, str(exc))))
        if part.radius is not None and part.apex is not None:
            results.append(named(verify_eccentricity(G, S, part.apex, part.radius)))
        if part.pathwidth is not None:
            try:
                results.append(named(verify_piece_pathwidth(G, S, part.apex, part.pathwidth)))
            except (InputError, SizeLimitError) as exc:
                results.append(named(_fail("piece-pathwidth", part.apex, str(exc))))
        try:
            T = certify_treedepth_ub(G, S, part.role, part.apex)
            results.append(named(verify_elimination_tree(G, S, T)))
        except (CertificationError, InputError) as exc:
            witness = getattr(exc, "witness", None)
            results.append(named(_fail("treedepth", part.apex if witness is None else witness, str(exc))))
    results.append(verify_edge_cover(G, [p.vertices for p in cert.parts]))
    try:
        results.append(verify_induced_subdivision(G, cert.source, cert.subdivision))
    except InputError as exc:
        results.append(_fail("induced-subdivision", None, str(exc)))
    n = detect_wall_order(cert.source)
    if n is not None and results[-1]:
        try:
            model = certify_tw_lower_bound(G, cert.subdivision, n)
            res = verify_minor_model(G, grid(n, n), model)
            res.check = f"grid({n},{n}) minor (tw >= {n})"
            results.append(res)
        except CertificationError as exc:
            results.append(_fail(f"grid({n},{n}) minor", exc.witness, str(exc)))
    return results
