import networkx as nx
import pytest
from hypothesis import given, strategies as st

from brute import adjacency, domination_number, max_p3_packing
from lambdapack.errors import OracleCapError
from lambdapack.generators import gen_constructionH
from lambdapack.graph import Graph, complete_graph, cycle_graph, path_graph
from lambdapack.oracle import (
    domination_exact,
    has_lambda_factor,
    independent_domination_exact,
    is_dominating,
    lambda_e_exact,
    lambda_exact,
    lambda_induced_exact,
    max_induced_matching,
    p4_factor,
)
from lambdapack.packing import PackingConstraint


def test_lambda_values(k4, net):
    assert lambda_exact(k4)[0] == 1
    assert lambda_exact(net)[0] == 1
    assert lambda_exact(cycle_graph(6))[0] == 2
    assert lambda_exact(Graph())[0] == 0


def test_witness_is_valid(prism):
    k, p = lambda_exact(prism)
    assert k == len(p) == 2
    p.validate(prism)


def test_factor_queries(net):
    assert has_lambda_factor(complete_graph(3))[0]
    ok, p = has_lambda_factor(net)
    assert not ok and p is None
    H, T = gen_constructionH()
    assert not has_lambda_factor(H, c=PackingConstraint(required_path=T))[0]
    assert not has_lambda_factor(H.delete_vertices(T))[0]


def test_factor_constraints(prism):
    c = PackingConstraint(forbidden_edges={(0, 1)})
    ok, p = has_lambda_factor(prism, c=c)
    assert ok and not p.uses_edge(0, 1)
    c = PackingConstraint(required_edge=(0, 3))
    ok, p = has_lambda_factor(prism, c=c)
    assert ok and p.uses_edge(0, 3)
    c = PackingConstraint(forbidden_vertices={0, 1, 2})
    ok, p = has_lambda_factor(prism, c=c)
    assert ok and p.vertices == {3, 4, 5}


def test_induced_values():
    assert lambda_induced_exact(complete_graph(3))[0] == 0
    assert lambda_induced_exact(path_graph(3))[0] == 1
    assert lambda_induced_exact(cycle_graph(6))[0] == 2


def test_induced_matching_values():
    assert max_induced_matching(path_graph(4))[0] == 1
    assert max_induced_matching(Graph.from_edges([(0, 1), (2, 3)]))[0] == 2
    assert max_induced_matching(cycle_graph(7))[0] == 2


def test_domination_values(k4, net):
    assert domination_exact(k4)[0] == 1
    assert domination_exact(cycle_graph(6))[0] == 2
    g, S = domination_exact(net)
    assert g == 3 and is_dominating(net, S)
    assert independent_domination_exact(net)[0] == 3


def test_lambda_e_exact():
    assert lambda_e_exact(path_graph(4)) == 1
    assert lambda_e_exact(complete_graph(4)) == 3
    assert lambda_e_exact(cycle_graph(5)) == 2


def test_cap_enforced():
    with pytest.raises(OracleCapError):
        lambda_exact(cycle_graph(30))
    with pytest.raises(OracleCapError):
        has_lambda_factor(cycle_graph(27), cap=24)
    assert lambda_exact(cycle_graph(30), cap=30)[0] == 10


small = st.builds(lambda n, p, s: Graph.from_networkx(nx.gnp_random_graph(n, p, seed=s)),
                  st.integers(1, 9), st.floats(0.1, 0.8), st.integers(0, 10**6))


@given(small)
def test_lambda_matches_naive_search(g):
    k, p = lambda_exact(g)
    p.validate(g)
    assert k == max_p3_packing(adjacency(g))


@given(small)
def test_induced_matches_naive_search(g):
    k, p = lambda_induced_exact(g)
    assert k == max_p3_packing(adjacency(g), induced=True)
    for a, b, c in p.paths:
        assert not g.has_edge(a, c)


@given(small)
def test_domination_matches_naive_search(g):
    gamma, S = domination_exact(g)
    assert is_dominating(g, S) and len(S) == gamma == domination_number(adjacency(g))
    assert independent_domination_exact(g)[0] >= gamma


@given(small)
def test_factor_iff_lambda_is_third(g):
    ok, p = has_lambda_factor(g)
    assert ok == (g.n() % 3 == 0 and lambda_exact(g)[0] == g.n() // 3)
    if ok:
        assert p.is_factor_of(g)


@given(small)
def test_induced_matching_against_networkx_square(g):
    k, es = max_induced_matching(g)
    # an induced matching is an independent set in the square of L(G)
    L = nx.line_graph(g.to_networkx())
    sq = nx.power(L, 2) if L.number_of_nodes() else L
    comp = nx.complement(sq)
    best = max((len(c) for c in nx.find_cliques(comp)), default=0) if comp.number_of_nodes() else 0
    assert k == best == len(es)


def test_p4_factor():
    assert p4_factor(cycle_graph(8)) is not None
    assert p4_factor(complete_graph(4)) is not None
    assert p4_factor(Graph.from_edges([(0, 1), (0, 2), (0, 3)])) is None
    assert p4_factor(cycle_graph(6)) is None


@given(small)
def test_p4_factor_is_a_partition(g):
    q = p4_factor(g)
    if q is None:
        return
    assert sorted(v for p in q for v in p) == sorted(g.vertices)
    for a, b, c, d in q:
        assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
