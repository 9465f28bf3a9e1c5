import random

import pytest
from hypothesis import given, settings, strategies as st

from isocover import (
    Apex, ApexSpec, DomainError, Graph, IncidenceColoring, InputError, Original, Subdiv,
    build_from, build_three_cover_wall, build_tree_cover, build_two_cover, greedy_coloring,
    is_tree, path, verify_certificate, wall, wall_3_coloring,
)
from isocover.constructions import APEX_P3, APEX_P5, TREE, parts_graphs
from isocover.graph import _edge, components, induced_subgraph
from isocover.verifiers import verify_eccentricity, verify_isometric

from oracles import random_graph

V = Original


def test_tree_cover_k2_example():
    cert = build_tree_cover(path(2), greedy_coloring(path(2)))
    assert (cert.graph.n, cert.graph.m, len(cert.parts)) == (10, 9, 3)
    assert all(verify_certificate(cert))


def test_tree_cover_membership_bullets():
    X = wall(2)
    phi = wall_3_coloring(2)
    cert = build_tree_cover(X, phi)
    members = [set(p.vertices) for p in cert.parts]
    for (u, v), (s1, s2, s3, s4, s5) in cert.subdivision.items():
        assert {u, s1, s2} <= members[phi.color(u, v) - 1]
        assert {s2, s3, s4} <= members[3]
        assert {s4, s5, v} <= members[phi.color(v, u) - 1]
    for a in (p.apex for p in cert.parts):
        assert all(isinstance(w, Subdiv) for w in cert.graph.neighbors(a))


def test_tree_cover_parts_are_radius_two_trees(source_corpus):
    for X in source_corpus.values():
        cert = build_tree_cover(X, greedy_coloring(X))
        for part, H in zip(cert.parts, parts_graphs(cert)):
            assert is_tree(H)
            assert verify_eccentricity(cert.graph, part.vertices, part.apex, 2)


def test_tree_cover_rejections():
    X = path(3)
    e0, e1 = X.edges
    bad = IncidenceColoring({(V(0), e0): 1, (V(1), e0): 1, (V(1), e1): 2, (V(2), e1): 1}, 2)
    with pytest.raises(DomainError):
        build_tree_cover(X, bad)
    disconnected = Graph([V(i) for i in range(4)], [(V(0), V(1)), (V(2), V(3))])
    with pytest.raises(DomainError):
        build_tree_cover(disconnected, greedy_coloring(disconnected))
    with pytest.raises(DomainError):
        build_two_cover(Graph([V(0)]))


def test_two_cover_k2_example():
    cert = build_two_cover(path(2))
    (u, v), (s1, s2, s3, s4, s5) = next(iter(cert.subdivision.items()))
    p1, p2 = (set(p.vertices) for p in cert.parts)
    core1 = induced_subgraph(cert.graph, p1 - {Apex(1)})
    assert set(core1.vertices) == {s2, s3, s4} and core1.m == 2
    core2 = induced_subgraph(cert.graph, p2 - {Apex(2)})
    assert sorted(map(len, components(core2))) == [3, 3]
    assert {frozenset({u, s1, s2}), frozenset({s4, s5, v})} == set(components(core2))


def test_two_cover_overlap_is_s2_s4(source_corpus):
    for X in source_corpus.values():
        cert = build_two_cover(X)
        p1, p2 = (set(p.vertices) for p in cert.parts)
        expected = {s for internal in cert.subdivision.values() for s in (internal[1], internal[3])}
        assert p1 & p2 == expected
        assert [p.role for p in cert.parts][0] == APEX_P3


def test_build_from_examples():
    P3 = path(3)
    G, H1, H2 = build_from(P3, ApexSpec(frozenset(P3.vertices), frozenset()))
    assert H2 == {Apex(2)}
    assert verify_eccentricity(G, H1, Apex(1), 1)
    G, H1, H2 = build_from(P3, ApexSpec(frozenset(P3.vertices), frozenset(P3.vertices)))
    assert verify_isometric(G, H1) and verify_isometric(G, H2)
    with pytest.raises(InputError):
        build_from(P3, ApexSpec(frozenset([V(7)])))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 12), st.data())
def test_build_from_parts_always_isometric(seed, n, data):
    Gp = random_graph(random.Random(seed), n, 0.3, connected=False)
    V1 = data.draw(st.sets(st.sampled_from(Gp.vertices)))
    V2 = data.draw(st.sets(st.sampled_from(Gp.vertices)))
    G, H1, H2 = build_from(Gp, ApexSpec(frozenset(V1), frozenset(V2)))
    assert verify_isometric(G, H1) and verify_isometric(G, H2)


@pytest.mark.parametrize("n", range(1, 6))
def test_three_cover_full_suite(n):
    cert = build_three_cover_wall(n)
    assert [p.role for p in cert.parts] == [TREE, TREE, APEX_P5]
    results = verify_certificate(cert)
    assert all(results), [r.detail for r in results if not r]
    lengths = {len(internal) for internal in cert.subdivision.values()}
    assert lengths == ({5} if n == 1 else {5, 7})


def test_three_cover_rejects_bad_order():
    for bad in (0, -2, 1.5):
        with pytest.raises(InputError):
            build_three_cover_wall(bad)


def test_constructions_deterministic():
    X = wall(3)
    assert build_tree_cover(X, wall_3_coloring(3)) == build_tree_cover(X, wall_3_coloring(3))
    assert build_two_cover(X) == build_two_cover(X)
    assert build_three_cover_wall(3) == build_three_cover_wall(3)


def _helpers(cert):
    return [v for v in cert.graph.vertices if isinstance(v, Subdiv) and isinstance(v.edge[0], Apex)]


@pytest.mark.parametrize("n", range(1, 5))
def test_three_cover_helpers_preserve_distances(n):
    from isocover.graph import all_pairs_distances
    cert = build_three_cover_wall(n)
    helpers = set(_helpers(cert))
    assert helpers
    for z in helpers:
        assert cert.graph.degree(z) == 2 and z in set(cert.parts[2].vertices)
    keep = [v for v in cert.graph.vertices if v not in helpers]
    with_h = all_pairs_distances(cert.graph)
    without = all_pairs_distances(induced_subgraph(cert.graph, keep))
    assert all(with_h[u][v] == without[u][v] for u in keep for v in keep)


@pytest.mark.parametrize("n", range(1, 5))
def test_three_cover_every_piece_has_a_cycle(n):
    cert = build_three_cover_wall(n)
    part = cert.parts[2]
    H = induced_subgraph(cert.graph, part.vertices)
    for comp in components(induced_subgraph(H, set(part.vertices) - {part.apex})):
        piece = induced_subgraph(H, comp | {part.apex})
        assert piece.m >= piece.n
