import random

import networkx as nx
import pytest

from isocover import Graph, InputError, Original, Subdiv, Apex, wall, petersen, path
from isocover.formats import from_graph6, read_graph6_file, to_dot, to_graph6

from oracles import random_graph


def _to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from((G.index[u], G.index[v]) for u, v in G.edges)
    return H


def corpus_100():
    rng = random.Random(7)
    graphs = [Graph([]), Graph([Original(0)]), path(2), petersen(), wall(3)]
    while len(graphs) < 95:
        graphs.append(random_graph(rng, rng.randint(2, 40), rng.random() * 0.5, connected=rng.random() < 0.5))
    graphs += [random_graph(rng, n, 0.02, connected=False) for n in (62, 63, 64, 100, 70)]
    return graphs


@pytest.mark.parametrize("G", corpus_100(), ids=lambda G: f"n{G.n}m{G.m}")
def test_graph6_matches_networkx(G):
    text = to_graph6(G)
    assert text == nx.to_graph6_bytes(_to_nx(G), header=False).decode().strip()
    back = from_graph6(text, G.vertices)
    assert back == G
    assert nx.utils.graphs_equal(_to_nx(from_graph6(text)), nx.from_graph6_bytes(text.encode()))


def test_large_order_prefix():
    G = Graph([Original(i) for i in range(300)], [(Original(0), Original(299))])
    text = to_graph6(G)
    assert text.startswith("~?")
    assert from_graph6(text) == G


def test_header_optional():
    text = to_graph6(petersen(), header=True)
    assert text.startswith(">>graph6<<")
    assert from_graph6(text) == from_graph6(to_graph6(petersen()))


@pytest.mark.parametrize("bad", ["", "A", "C~~", "B\x01", "~"])
def test_rejects_malformed(bad):
    with pytest.raises(InputError):
        from_graph6(bad)


def test_label_count_checked():
    with pytest.raises(InputError):
        from_graph6(to_graph6(path(3)), [Original(0)])


def test_read_file(tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(to_graph6(petersen()) + "\n")
    assert read_graph6_file(f).m == 15
    f.write_text("")
    with pytest.raises(InputError):
        read_graph6_file(f)


def test_dot_shapes_and_stripes():
    s = Subdiv((Original(0), Original(1)), 1)
    G = Graph([Original(0), s, Apex(1)], [(Original(0), s), (s, Apex(1))])
    text = to_dot(G, {s: [0, 1], Apex(1): [1]})
    assert text.startswith("graph G {")
    assert '"s(v0,v1,1)" [label="s(v0,v1,1)", shape=square, style="striped"' in text
    assert "shape=doublecircle" in text
    assert text.count(" -- ") == 2
