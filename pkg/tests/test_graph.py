import networkx as nx
import pytest
from hypothesis import given, strategies as st

from lambdapack.errors import GraphError
from lambdapack.graph import (
    Graph,
    complete_graph,
    connected_components,
    cycle_graph,
    delete_edges,
    delete_vertices,
    disjoint_union,
    edge,
    induced_subgraph_of_edgeset,
    is_claw_free,
    line_graph,
    neighbors,
    path_graph,
    validate_graph,
)
from lambdapack.graphio import from_edgelist, from_graph6, read_graphs, to_edgelist, to_graph6


def test_neighbors_basic(k4, net):
    tri = complete_graph(3)
    assert neighbors(tri, 0) == {1, 2}
    assert neighbors(k4, 0) == {1, 2, 3}
    assert neighbors(net, 3) == {0}
    with pytest.raises(GraphError, match="vertex not in graph"):
        neighbors(k4, 9)


def test_delete_vertices_keeps_labels(k4, net):
    assert delete_vertices(k4, [0]) == complete_graph(3, offset=1)
    assert delete_vertices(net, [3, 4, 5]) == complete_graph(3)
    p = path_graph(3)
    h = delete_vertices(p, [1])
    assert h.vertices == (0, 2) and h.m() == 0
    assert delete_vertices(net, []) == net


def test_delete_edges(k4, claw):
    assert delete_edges(complete_graph(3), [(0, 1)]) == Graph(range(3), [(0, 2), (1, 2)])
    c4 = delete_edges(k4, [(0, 1), (2, 3)])
    assert all(c4.degree(v) == 2 for v in c4)
    bare = delete_edges(claw, claw.edges())
    assert bare.n() == 4 and bare.m() == 0
    with pytest.raises(GraphError, match="edge not in graph"):
        delete_edges(k4, [(0, 7)])


def test_claw_detection(claw, net, k4):
    ok, w = is_claw_free(claw)
    assert not ok and sorted(w) == [0, 1, 2, 3]
    assert is_claw_free(net) == (True, None)
    assert is_claw_free(line_graph(k4)[0])[0]


def test_edgeset_subgraph(k4):
    assert induced_subgraph_of_edgeset(k4, [(0, 1)]).n() == 2
    star = induced_subgraph_of_edgeset(k4, [(0, 1), (0, 2), (0, 3)])
    assert not is_claw_free(star)[0]
    tri = induced_subgraph_of_edgeset(k4, [(0, 1), (1, 2), (0, 2)])
    assert tri == complete_graph(3)
    with pytest.raises(GraphError):
        induced_subgraph_of_edgeset(cycle_graph(4), [(0, 2)])


def test_components(net):
    assert connected_components(Graph()) == []
    two, _ = disjoint_union(complete_graph(3), complete_graph(3))
    assert sorted(map(len, connected_components(two))) == [3, 3]
    assert connected_components(net) == [frozenset(range(6))]


def test_line_graph_examples(claw):
    L, idx = line_graph(path_graph(3))
    assert L.n() == 2 and L.m() == 1
    assert line_graph(claw)[0] == complete_graph(3)
    L5, _ = line_graph(cycle_graph(5))
    assert nx.is_isomorphic(L5.to_networkx(), nx.cycle_graph(5))


def test_edge_normalization():
    assert edge(3, 1) == (1, 3)
    with pytest.raises(GraphError):
        edge(2, 2)
    with pytest.raises(GraphError):
        Graph([0], [(0, 0)])
    with pytest.raises(GraphError):
        Graph([-1])


def test_graph6_round_trip(net):
    s = to_graph6(net)
    assert from_graph6(s) == net
    assert from_graph6(">>graph6<<" + s) == net
    with pytest.raises(GraphError):
        from_graph6("")


def test_graph6_compacts_sparse_labels():
    g = Graph([10, 20, 30], [(10, 20), (20, 30)])
    assert from_graph6(to_graph6(g)) == path_graph(3)


def test_edgelist_round_trip(prism):
    assert from_edgelist(to_edgelist(prism)) == prism
    with pytest.raises(GraphError, match="header"):
        from_edgelist("3")
    with pytest.raises(GraphError, match="out of range"):
        from_edgelist("2 1\n0 5\n")
    with pytest.raises(GraphError, match="says 2 edges"):
        from_edgelist("3 2\n0 1\n")


def test_read_graphs_skips_comments(tmp_path, net, k4):
    f = tmp_path / "g.g6"
    f.write_text(f"# header\n{to_graph6(net)}\n\n{to_graph6(k4)}\n")
    with open(f) as fh:
        assert read_graphs(fh) == [net, k4]


edges_st = st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)).filter(lambda e: e[0] != e[1]), max_size=30)


@given(edges_st)
def test_line_graph_counts_and_clawfree(es):
    g = Graph.from_edges(es, 10)
    L, idx = line_graph(g)
    assert L.n() == g.m()
    assert L.m() == sum(d * (d - 1) // 2 for d in g.degrees().values())
    assert is_claw_free(L)[0]
    assert sorted(idx) == g.edges()
    validate_graph(L)


@given(edges_st, st.sets(st.integers(0, 9)))
def test_deletion_is_label_stable(es, S):
    g = Graph.from_edges(es, 10)
    h = g.delete_vertices(S)
    assert set(h.vertices) == set(g.vertices) - S
    for u, v in h.edges():
        assert g.has_edge(u, v)
    for u, v in g.edges():
        if u not in S and v not in S:
            assert h.has_edge(u, v)
    validate_graph(h)


@given(edges_st)
def test_graph6_round_trip_property(es):
    g = Graph.from_edges(es, 10)
    assert from_graph6(to_graph6(g)) == g
