from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from lambdapack.decomposition import is_edge_two_connected
from lambdapack.errors import InvalidPacking, PreconditionError
from lambdapack.generators import gen_random_clawfree, gen_random_cubic, gen_delta
from lambdapack.graph import Graph, complete_graph, cycle_graph, is_connected, line_graph, path_graph
from lambdapack.linegraph import (
    EdgeDisjointPacking,
    all_paths_through,
    edge_chain_certificate,
    edge_three_factor,
    edge_three_factor_constrained,
    induced_matching_to_lambda_packing,
    is_induced_matching,
    lambda_e,
    lambda_e_via_matching,
    lambda_packing_to_induced_matching,
)
from lambdapack.oracle import lambda_e_exact, lambda_exact, max_induced_matching
from lambdapack.packing import LambdaPacking


def _random_connected(seed, n, p=0.35):
    g = Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))
    return g if is_connected(g) and g.m() else None


def test_single_path_in_c5():
    L, M = lambda_packing_to_induced_matching(cycle_graph(5), LambdaPacking([(0, 1, 2)]))
    assert L.n() == 5 and len(M) == 1


def test_c6_two_paths():
    p = LambdaPacking([(0, 1, 2), (3, 4, 5)])
    L, M = lambda_packing_to_induced_matching(cycle_graph(6), p)
    assert len(M) == 2 and is_induced_matching(L, M)
    assert induced_matching_to_lambda_packing(cycle_graph(6), M) == p


def test_c9_maximum_both_sides():
    g = cycle_graph(9)
    L, _ = line_graph(g)
    assert lambda_exact(g)[0] == 3 == max_induced_matching(L)[0]


def test_non_induced_matching_rejected():
    L, _ = line_graph(cycle_graph(6))
    with pytest.raises(InvalidPacking):
        induced_matching_to_lambda_packing(cycle_graph(6), [(0, 1), (2, 3)])
    assert not is_induced_matching(L, [(0, 1), (0, 1)])


@pytest.mark.parametrize("g,want", [(path_graph(4), 1), (complete_graph(4), 3), (cycle_graph(5), 2)])
def test_lambda_e_examples(g, want):
    count, pk, notes = lambda_e(g)
    assert count == want and notes == []


def test_lambda_e_disconnected_note():
    g = Graph(range(8), [(0, 1), (1, 2), (2, 3), (5, 6), (6, 7)])
    count, _, notes = lambda_e(g)
    assert count == 2 and notes == ["disconnected input: per-component sum"]


def test_edge_disjoint_packing_validation():
    g = cycle_graph(4)
    with pytest.raises(InvalidPacking, match="twice"):
        EdgeDisjointPacking((((0, 1), (1, 2)), ((0, 1), (0, 3)))).validate(g)
    with pytest.raises(InvalidPacking, match="not connected"):
        EdgeDisjointPacking((((0, 1), (2, 3)),)).validate(g)


def test_edge_three_factor_examples():
    assert len(edge_three_factor(cycle_graph(6))) == 2
    pk = edge_three_factor(complete_graph(4))
    assert len(pk) == 2 and pk.edges() == complete_graph(4).edges()
    paw = Graph(range(4), [(0, 1), (1, 2), (0, 2), (2, 3)])
    with pytest.raises(PreconditionError, match="mod 3"):
        edge_three_factor(paw)


def test_edge_three_factor_end_block_guard():
    # three pendant paths of length two: L has three end-blocks
    spider = Graph(range(7), [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    with pytest.raises(PreconditionError, match="end-blocks"):
        edge_three_factor(spider)


def test_constrained_on_k4_exhaustive():
    g = complete_graph(4)
    for b in g.vertices:
        for a, c in combinations(sorted(g.neighbors(b)), 2):
            for mode in ("avoiding", "containing"):
                pk = edge_three_factor_constrained(g, (a, b, c), mode)
                hit = any((min(a, b), max(a, b)) in part and (min(b, c), max(b, c)) in part for part in pk.parts)
                assert hit == (mode == "containing")


def test_constrained_preconditions():
    bridge = Graph(range(6), [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
    with pytest.raises(PreconditionError):
        edge_three_factor_constrained(bridge, (0, 1, 2), "containing")
    with pytest.raises(PreconditionError):
        edge_three_factor_constrained(complete_graph(4), (0, 1, 2), "sideways")


def test_avoiding_fails_on_the_triangle():
    # the only edge 3-factor of K3 is E(K3) itself, which contains every path
    g = complete_graph(3)
    assert is_edge_two_connected(g)
    with pytest.raises(Exception):
        edge_three_factor_constrained(g, (0, 1, 2), "avoiding")


def test_edge_chain_certificate():
    assert edge_chain_certificate(cycle_graph(6)) == {"edge_chain": True, "line_graph_eb_le_2": True}


def test_all_paths_through():
    assert all_paths_through(path_graph(3), 1) == [(0, 1, 2)]
    assert len(all_paths_through(complete_graph(4), 0)) == 3 + 3 * 2


@settings(max_examples=40)
@given(st.integers(0, 10**6), st.integers(3, 10))
def test_lambda_e_two_routes(seed, n):
    g = _random_connected(seed, n)
    if g is None:
        return
    a, pa, _ = lambda_e(g)
    b, pb = lambda_e_via_matching(g)
    assert a == b == g.m() // 2
    if g.m() <= 18:
        assert lambda_e_exact(g) == a


@settings(max_examples=40)
@given(st.integers(0, 10**6), st.integers(3, 11))
def test_roundtrip(seed, n):
    g = gen_random_clawfree(n, seed)
    _, p = lambda_exact(g)
    L, M = lambda_packing_to_induced_matching(g, p)
    assert induced_matching_to_lambda_packing(g, M) == p
    if L.n() <= 24:
        assert max_induced_matching(L)[0] == len(p)


@settings(max_examples=20)
@given(st.integers(0, 10**6))
def test_edge_three_factor_cubic(seed):
    g = gen_delta(gen_random_cubic(4, seed))
    if g.m() % 3 == 0:
        pk = edge_three_factor(g)
        assert pk.edges() == g.edges()
