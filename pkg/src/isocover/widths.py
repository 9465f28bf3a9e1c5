"""Exact treewidth, pathwidth and treedepth for small graphs.

All three are subset dynamic programs (see ``_pykernels``) and are only
run up to a vertex bound.  The bound defaults to ``DEFAULT_BOUND`` and can
be raised through ``ISOCOVER_ORACLE_BOUND`` up to ``HARD_BOUND``; a larger
graph raises :class:`SizeLimitError` rather than returning an estimate.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Dict, Tuple

from . import kernels
from .errors import InputError, SizeLimitError
from .graph import Graph, components, induced_subgraph
from .labels import Label, Original
from .verifiers import CheckResult, EliminationTree

DEFAULT_BOUND = 18
HARD_BOUND = 24
BOUND_ENV = "ISOCOVER_ORACLE_BOUND"


def oracle_bound() -> int:
    raw = os.environ.get(BOUND_ENV)
    if raw is None:
        return DEFAULT_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{BOUND_ENV} must be an integer, got {raw!r}") from None
    return max(1, min(value, HARD_BOUND))


def _check_size(G: Graph, bound=None):
    limit = oracle_bound() if bound is None else min(bound, HARD_BOUND)
    if G.n > limit:
        raise SizeLimitError(f"graph has {G.n} vertices; exact oracles are limited to {limit}")


@dataclass(frozen=True)
class TreeDecomposition:
    tree: Graph  # over Original(bag id)
    bags: Dict[int, frozenset]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1


@dataclass(frozen=True)
class PathDecomposition:
    bags: Tuple[frozenset, ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def as_tree(self) -> TreeDecomposition:
        ids = [Original(i) for i in range(len(self.bags))]
        return TreeDecomposition(Graph(ids, zip(ids, ids[1:])), dict(enumerate(self.bags)))


def decomposition_from_order(G: Graph, order) -> TreeDecomposition:
    """Tree decomposition from an elimination order (list of vertices)."""
    if not order:
        return TreeDecomposition(Graph([Original(0)]), {0: frozenset()})
    pos = {v: i for i, v in enumerate(order)}
    fill = {v: set(G.neighbors(v)) for v in G.vertices}
    bags = {}
    later_of = {}
    for i, v in enumerate(order):
        later = {w for w in fill[v] if pos[w] > i}
        bags[i] = frozenset(later | {v})
        later_of[i] = later
        for w in later:
            fill[w] |= later - {w}
    ids = [Original(i) for i in range(len(order))]
    edges = []
    roots = []
    for i in range(len(order)):
        if later_of[i]:
            j = min(pos[w] for w in later_of[i])
            edges.append((ids[i], ids[j]))
        else:
            roots.append(i)
    # join the per-component roots into one tree
    edges.extend((ids[a], ids[b]) for a, b in zip(roots, roots[1:]))
    return TreeDecomposition(Graph(ids, edges), bags)


def exact_treewidth(G: Graph, bound=None) -> Tuple[int, TreeDecomposition]:
    _check_size(G, bound)
    width, order = kernels.treewidth_dp(G.bitmasks())
    D = decomposition_from_order(G, [G.vertices[i] for i in order])
    assert D.width == width, (D.width, width)
    return width, D


def exact_pathwidth(G: Graph, bound=None) -> Tuple[int, PathDecomposition]:
    _check_size(G, bound)
    width, order = kernels.vertex_separation_dp(G.bitmasks())
    if not order:
        return -1, PathDecomposition((frozenset(),))
    seq = [G.vertices[i] for i in order]
    pos = {v: i for i, v in enumerate(seq)}
    bags = []
    for i, v in enumerate(seq):
        active = {u for u in seq[:i] if any(pos[w] >= i for w in G.neighbors(u))}
        bags.append(frozenset(active | {v}))
    D = PathDecomposition(tuple(bags))
    assert D.width == width, (D.width, width)
    return width, D


def exact_treedepth(G: Graph, bound=None) -> Tuple[int, EliminationTree]:
    _check_size(G, bound)
    depth, parent = kernels.treedepth_dp(G.bitmasks())
    forest = {G.vertices[i]: (None if p < 0 else G.vertices[p]) for i, p in enumerate(parent)}
    T = EliminationTree(forest)
    assert T.depth == depth, (T.depth, depth)
    return depth, T


def verify_tree_decomposition(G: Graph, D) -> CheckResult:
    """Both decomposition axioms, trace connectivity, and that T is a tree."""
    check = "tree-decomposition"
    if isinstance(D, PathDecomposition):
        D = D.as_tree()
    T = D.tree
    if set(D.bags) != {x.id for x in T.vertices}:
        return CheckResult(check, False, None, "bag ids do not match tree nodes")
    if not (T.n > 0 and len(components(T)) == 1 and T.m == T.n - 1):
        return CheckResult(check, False, None, "decomposition tree is not a tree")
    for v in G.vertices:
        holding = [Original(x) for x, bag in D.bags.items() if v in bag]
        if not holding:
            return CheckResult(check, False, v, f"vertex {v} is in no bag")
        if len(components(induced_subgraph(T, holding))) != 1:
            return CheckResult(check, False, v, f"bags containing {v} are not connected in the tree")
    for u, v in G.edges:
        if not any(u in bag and v in bag for bag in D.bags.values()):
            return CheckResult(check, False, (u, v), f"no bag holds edge {u}{v}")
    for bag in D.bags.values():
        for v in bag:
            if v not in G:
                return CheckResult(check, False, v, f"bag vertex {v} is not in the graph")
    return CheckResult(check, True, None, f"width {D.width}")


def widths_report(G: Graph, bound=None) -> dict:
    """tw, pw and td with their certificates, as plain JSON data."""
    tw, tdec = exact_treewidth(G, bound)
    pw, pdec = exact_pathwidth(G, bound)
    td, etree = exact_treedepth(G, bound)
    return {
        "vertices": G.n,
        "edges": G.m,
        "backend": kernels.BACKEND,
        "treewidth": {
            "value": tw,
            "bags": {str(k): [str(v) for v in sorted(b, key=G.index.get)] for k, b in tdec.bags.items()},
            "tree_edges": [[u.id, v.id] for u, v in tdec.tree.edges],
        },
        "pathwidth": {
            "value": pw,
            "bags": [[str(v) for v in sorted(b, key=G.index.get)] for b in pdec.bags],
        },
        "treedepth": {
            "value": td,
            "parent": {str(v): (None if p is None else str(p)) for v, p in etree.parent.items()},
        },
    }
