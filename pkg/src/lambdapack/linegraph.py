"""Packings of G against structures of its line graph L(G).

A 3-vertex path abc of G is an edge (ab, bc) of L(G); vertex-disjoint
paths are exactly the induced matchings of L(G), and vertex packings of
L(G) are edge-disjoint packings of G.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from .connectivity import is_k_connected, is_k_edge_connected, is_two_connected
from .decomposition import block_decomposition, is_edge_chain, is_edge_two_connected
from .errors import ConstructionFailure, InvalidPacking, PreconditionError
from .graph import Edge, Graph, connected_components, edge, is_connected, line_graph
from .packer import pack_any, pack_chain
from .packing import LambdaPacking, normalize_path
from .theorems import factor_avoiding_edge, factor_containing_edge

EdgePair = Tuple[Edge, Edge]


@dataclass(frozen=True)
class EdgeDisjointPacking:
    parts: Tuple[Tuple[Edge, ...], ...]

    def __len__(self) -> int:
        return len(self.parts)

    def edges(self) -> List[Edge]:
        return sorted(e for part in self.parts for e in part)

    def validate(self, host: Graph, size: Optional[int] = None) -> None:
        seen = set()
        for part in self.parts:
            if size is not None and len(part) != size:
                raise InvalidPacking(f"part {part} has {len(part)} edges, expected {size}")
            for e in part:
                if not host.has_edge(*e):
                    raise InvalidPacking(f"{e} is not an edge of the host")
                if e in seen:
                    raise InvalidPacking(f"edge {e} used twice")
                seen.add(e)
            sub = Graph({v for e in part for v in e}, part)
            if not is_connected(sub):
                raise InvalidPacking(f"part {part} is not connected")

    def to_json(self) -> list:
        return [[list(e) for e in part] for part in self.parts]


# -- Λ-packings and induced matchings ---------------------------------------

def lambda_packing_to_induced_matching(g: Graph, p: LambdaPacking) -> Tuple[Graph, List[Tuple[int, int]]]:
    """Map each path abc to the line-graph edge (ab, bc)."""
    p.validate(g)
    L, idx = line_graph(g)
    out = sorted(tuple(sorted((idx[edge(a, b)], idx[edge(b, c)]))) for a, b, c in p.paths)
    if not is_induced_matching(L, out):
        raise InvalidPacking("image is not an induced matching")
    return L, out


def is_induced_matching(L: Graph, M: Sequence[Tuple[int, int]]) -> bool:
    ends = {}
    for i, (u, v) in enumerate(M):
        if not L.has_edge(u, v):
            return False
        for x in (u, v):
            if x in ends:
                return False
            ends[x] = i
    for u, v in L.edges():
        if u in ends and v in ends and ends[u] != ends[v]:
            return False
    return True


def induced_matching_to_lambda_packing(g: Graph, M: Sequence[Tuple[int, int]]) -> LambdaPacking:
    """Inverse map: a line-graph edge joins two edges of G sharing a centre."""
    L, idx = line_graph(g)
    if not is_induced_matching(L, M):
        raise InvalidPacking("not an induced matching of the line graph")
    es = g.edges()
    paths = []
    for i, j in M:
        e, f = es[i], es[j]
        (b,) = set(e) & set(f)
        (a,) = set(e) - {b}
        (c,) = set(f) - {b}
        paths.append((a, b, c))
    p = LambdaPacking(paths)
    p.validate(g)
    return p


# -- edge-disjoint Λ-packings -------------------------------------------------

def _pair_edges_dfs(g: Graph) -> List[EdgePair]:
    """Pair the edges of a connected graph into adjacent pairs, leaving at most one.

    Post-order DFS: at each vertex, pair its unpaired child tree edges and
    the back edges hanging below it; an odd one out goes with the parent
    edge.
    """
    root = g.vertices[0]
    parent = {root: None}
    order = []
    depth = {root: 0}
    stack = [(root, iter(sorted(g.neighbors(root))))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if w not in parent:
                parent[w] = v
                depth[w] = depth[v] + 1
                stack.append((w, iter(sorted(g.neighbors(w)))))
                advanced = True
                break
        if not advanced:
            order.append(v)
            stack.pop()
    pending: Dict[int, List[Edge]] = {v: [] for v in g.vertices}
    for u, v in g.edges():
        if parent.get(u) == v or parent.get(v) == u:
            continue
        deeper = u if depth[u] > depth[v] else v
        pending[deeper].append(edge(u, v))
    pairs: List[EdgePair] = []
    for v in order:
        loose = pending[v]
        up = parent[v]
        while len(loose) >= 2:
            pairs.append((loose.pop(), loose.pop()))
        if up is None:
            continue
        pe = edge(v, up)
        if loose:
            pairs.append((loose.pop(), pe))
        else:
            pending[up].append(pe)
    return pairs


def _pairs_to_packing(pairs: Sequence[EdgePair]) -> EdgeDisjointPacking:
    return EdgeDisjointPacking(tuple(sorted(tuple(sorted(p)) for p in pairs)))


def lambda_e(g: Graph) -> Tuple[int, EdgeDisjointPacking, List[str]]:
    """Maximum edge-disjoint Λ-packing, by DFS edge pairing per component.

    Returns (count, packing, notes).  For a disconnected graph the count is
    the sum over components.
    """
    notes = []
    pairs: List[EdgePair] = []
    comps = [c for c in connected_components(g) if len(c) > 1]
    if len(comps) > 1:
        notes.append("disconnected input: per-component sum")
    for comp in comps:
        pairs += _pair_edges_dfs(g.induced_subgraph(comp))
    pk = _pairs_to_packing(pairs)
    pk.validate(g, 2)
    return len(pk), pk, notes


def lambda_e_via_matching(g: Graph) -> Tuple[int, EdgeDisjointPacking]:
    """Same quantity from a maximum matching of L(g)."""
    L, _ = line_graph(g)
    es = g.edges()
    M = nx.max_weight_matching(L.to_networkx(), maxcardinality=True)
    pk = _pairs_to_packing([(es[i], es[j]) for i, j in M])
    pk.validate(g, 2)
    return len(pk), pk


# -- edge 3-factors -------------------------------------------------------------

def _parts_from_factor(es: Sequence[Edge], p: LambdaPacking) -> EdgeDisjointPacking:
    return EdgeDisjointPacking(tuple(sorted(tuple(sorted(es[i] for i in q)) for q in p.paths)))


def edge_three_factor(g: Graph) -> EdgeDisjointPacking:
    """Partition E(g) into connected 3-edge parts (L(g) connected with eb ≤ 2, e ≡ 0)."""
    if g.m() % 3:
        raise PreconditionError(f"e(G) = {g.m()} is not ≡ 0 mod 3")
    L, _ = line_graph(g)
    if L.n() == 0 or not is_connected(L):
        raise PreconditionError("line graph is not connected")
    if block_decomposition(L).eb > 2:
        raise PreconditionError("line graph has more than two end-blocks")
    p = pack_chain(L)
    if 3 * len(p) != L.n():
        raise ConstructionFailure("line graph chain has no Λ-factor", graph=g)
    out = _parts_from_factor(g.edges(), p)
    out.validate(g, 3)
    return out


def edge_three_factor_constrained(g: Graph, path: Sequence[int], mode: str) -> EdgeDisjointPacking:
    """Edge 3-factor with no part containing ``path`` (``avoiding``) or with one that does (``containing``)."""
    a, b, c = path
    if not (g.has_edge(a, b) and g.has_edge(b, c)) or a == c:
        raise PreconditionError(f"{tuple(path)} is not a 3-vertex path")
    if g.m() % 3:
        raise PreconditionError(f"e(G) = {g.m()} is not ≡ 0 mod 3")
    L, idx = line_graph(g)
    es = g.edges()
    i, j = idx[edge(a, b)], idx[edge(b, c)]
    if mode == "avoiding":
        if not is_edge_two_connected(g.delete_vertices(g.leaves())):
            raise PreconditionError("G minus its leaves is not edge 2-connected")
        if not is_two_connected(L):
            raise ConstructionFailure("line graph of a bridgeless core is not 2-connected", graph=g)
        p = factor_avoiding_edge(L, (i, j)).packing
        if any(i in q and j in q for q in p.paths):
            p = _separate(L, i, j)
        out = _parts_from_factor(es, p)
        if any(edge(a, b) in part and edge(b, c) in part for part in out.parts):
            raise ConstructionFailure("a part still contains the path", graph=g)
    elif mode == "containing":
        if not is_k_edge_connected(g, 3):
            raise PreconditionError("graph is not edge 3-connected")
        if not is_k_connected(L, 3):
            raise ConstructionFailure("line graph of an edge 3-connected graph is not 3-connected", graph=g)
        p = factor_containing_edge(L, (i, j)).packing
        out = _parts_from_factor(es, p)
        if not any(edge(a, b) in part and edge(b, c) in part for part in out.parts):
            raise ConstructionFailure("no part contains the path", graph=g)
    else:
        raise PreconditionError(f"unknown mode {mode!r}")
    out.validate(g, 3)
    return out


def _separate(L: Graph, i: int, j: int) -> LambdaPacking:
    """Λ-factor of L in which vertices i and j lie on different paths."""
    for q in sorted(all_paths_through(L, i)):
        if j in q:
            continue
        rest = L.delete_vertices(q)
        f = pack_any(rest)
        if 3 * len(f) == rest.n():
            return f + LambdaPacking([q])
    raise ConstructionFailure("no Λ-factor separates the two edges", graph=L)


def all_paths_through(g: Graph, v: int) -> List[Tuple[int, int, int]]:
    out = set()
    ns = sorted(g.neighbors(v))
    for x in range(len(ns)):
        for y in range(x + 1, len(ns)):
            out.add(normalize_path((ns[x], v, ns[y])))
    for w in ns:
        for u in sorted(g.neighbors(w) - {v}):
            out.add(normalize_path((v, w, u)))
    return sorted(out)


def edge_chain_certificate(g: Graph) -> Dict[str, bool]:
    """Whether g is an edge-chain and whether L(g) then has at most two end-blocks."""
    L, _ = line_graph(g)
    chain = is_edge_chain(g)
    return {"edge_chain": chain, "line_graph_eb_le_2": L.n() > 0 and is_connected(L) and block_decomposition(L).eb <= 2}
