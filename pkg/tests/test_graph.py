import random

import pytest
from hypothesis import given, settings, strategies as st

from isocover import (
    DomainError, Graph, InputError, Original, all_pairs_distances, complete, cycle,
    distance, grid, induced_subgraph, is_connected, is_tree, max_degree, path, petersen,
    radius, star, subdivide_all, subdivide_edge, subdivided_star, wall,
)
from isocover.graph import components, is_wall_horizontal, wall_coordinates, wall_vertex

from oracles import floyd_warshall, random_graph

V = Original


def test_distance_examples():
    P5 = path(5)
    assert distance(P5, V(0), V(4)) == 4
    assert distance(P5, V(2), V(2)) == 0
    G = Graph([V(0), V(1), V(2), V(3)], [(V(0), V(1)), (V(2), V(3))])
    assert distance(G, V(0), V(3)) is None
    with pytest.raises(InputError):
        distance(P5, V(0), V(9))


def test_all_pairs_examples():
    assert max(max(r.values()) for r in all_pairs_distances(path(3)).values()) == 2
    table = all_pairs_distances(complete(3))
    assert all(d == 1 for u, r in table.items() for v, d in r.items() if u != v)


def test_wall2_diameter_matches_per_vertex_search():
    W = wall(2)
    table = all_pairs_distances(W)
    fw = floyd_warshall(W)
    assert max(max(r.values()) for r in table.values()) == max(max(r.values()) for r in fw.values())


def test_radius_examples():
    assert radius(star(3)) == 1
    assert radius(path(5)) == 2
    fw = floyd_warshall(wall(3))
    assert radius(wall(3)) == min(max(r.values()) for r in fw.values())
    with pytest.raises(DomainError):
        radius(Graph([V(0), V(1)]))


def test_subdivide_edge_examples():
    assert subdivide_edge(path(2), (V(0), V(1)), 5).m == 6
    assert subdivide_edge(path(2), (V(0), V(1)), 5).n == 7
    K3 = complete(3)
    H = subdivide_edge(K3, (V(0), V(1)), 1)
    assert H.n == 4 and H.m == 4 and not H.has_edge(V(0), V(1))
    assert sorted(H.degree(v) for v in H.vertices) == [2, 2, 2, 2]
    with pytest.raises(InputError):
        subdivide_edge(path(3), (V(0), V(2)), 1)


def test_subdivide_all_counts():
    H, M = subdivide_all(path(2), 5)
    assert (H.n, H.m) == (7, 6)
    H, M = subdivide_all(wall(2), 5)
    assert (H.n, H.m) == (65, 66)
    assert len(M) == 11 and all(len(x) == 5 for x in M.values())


def test_wall_counts_by_enumeration():
    for n in range(1, 7):
        W = wall(n)
        assert W.n == n * (2 * n + 1)
        horizontal = n * 2 * n
        vertical = sum(1 for a in range(1, n) for b in range(1, 2 * n + 2) if a % 2 == b % 2)
        assert W.m == horizontal + vertical
        assert sum(1 for e in W.edges if is_wall_horizontal(n, e)) == horizontal
    assert (wall(4).n, wall(4).m) == (36, 46)


def test_wall_edges_follow_parity_rule():
    n = 4
    W = wall(n)
    for a in range(1, n):
        for b in range(1, 2 * n + 2):
            assert W.has_edge(wall_vertex(n, a, b), wall_vertex(n, a + 1, b)) == (a % 2 == b % 2)
    assert wall_coordinates(n, wall_vertex(n, 3, 5)) == (3, 5)


def test_generators():
    S = subdivided_star(3)
    assert (S.n, radius(S), max_degree(S)) == (7, 2, 3) and is_tree(S)
    assert is_connected(wall(3)) and max_degree(wall(3)) == 3
    assert max_degree(wall(1)) == 2
    assert (grid(3, 4).n, grid(3, 4).m) == (12, 17)
    assert petersen().m == 15 and all(petersen().degree(v) == 3 for v in petersen().vertices)
    assert wall(3) == wall(3) and hash(wall(3)) == hash(wall(3))
    for bad in (lambda: path(0), lambda: wall(0), lambda: grid(0, 2), lambda: star(-1), lambda: complete(0)):
        with pytest.raises(InputError):
            bad()


def test_induced_subgraph_examples():
    K3 = complete(3)
    assert induced_subgraph(K3, K3.vertices) == K3
    assert induced_subgraph(K3, []).n == 0
    assert induced_subgraph(K3, [V(0), V(1)]) == path(2)
    with pytest.raises(InputError):
        induced_subgraph(K3, [V(5)])


def test_graph_rejects_bad_input():
    with pytest.raises(InputError):
        Graph([V(0)], [(V(0), V(0))])
    with pytest.raises(InputError):
        Graph([V(0)], [(V(0), V(1))])


@st.composite
def connected_graphs(draw, max_n=14):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 10**6))
    p = draw(st.floats(0.0, 0.6))
    return random_graph(random.Random(seed), n, p)


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_distances_match_floyd_warshall(G):
    fw = floyd_warshall(G)
    table = all_pairs_distances(G)
    for u in G.vertices:
        for v in G.vertices:
            assert table[u][v] == fw[u][v]


@settings(max_examples=60, deadline=None)
@given(connected_graphs(), st.data())
def test_triangle_inequality(G, data):
    u, v, w = (data.draw(st.sampled_from(G.vertices)) for _ in range(3))
    assert distance(G, u, w) <= distance(G, u, v) + distance(G, v, w)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=10), st.integers(1, 4))
def test_subdivision_scales_distances(G, c):
    H, M = subdivide_all(G, c)
    assert is_connected(H)
    if max_degree(G) >= 2:
        assert max_degree(H) == max_degree(G)
    dG, dH = all_pairs_distances(G), all_pairs_distances(H)
    for u in G.vertices:
        for v in G.vertices:
            assert dH[u][v] == (c + 1) * dG[u][v]


@settings(max_examples=40, deadline=None)
@given(connected_graphs())
def test_components_partition(G):
    comps = components(G)
    assert sum(len(c) for c in comps) == G.n
    assert len(comps) == 1
