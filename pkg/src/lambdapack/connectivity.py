"""Vertex and edge connectivity tests at desk scale."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, List, Optional, Set, Tuple

from .graph import Edge, Graph, connected_components, is_connected


def articulation_points(g: Graph) -> Set[int]:
    """Cut vertices via an iterative lowpoint DFS (per component)."""
    disc = {}
    low = {}
    cuts: Set[int] = set()
    t = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    low[u] = min(low[u], disc[w])
                else:
                    disc[w] = low[w] = t
                    t += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(sorted(g.neighbors(w)))))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if p != root and low[u] >= disc[p]:
                    cuts.add(p)
        if root_children >= 2:
            cuts.add(root)
    return cuts


def is_two_connected(g: Graph) -> bool:
    """2-connected: connected, at least 3 vertices, no cut vertex."""
    return g.n() >= 3 and is_connected(g) and not articulation_points(g)


def find_vertex_cut(g: Graph, k: int) -> Optional[Tuple[int, ...]]:
    """A separating set of size < k, or ``None`` (exhaustive)."""
    vs = g.vertices
    for size in range(k):
        for S in combinations(vs, size):
            h = g.delete_vertices(S)
            if h.n() >= 2 and not is_connected(h):
                return S
    return None


def is_k_connected(g: Graph, k: int) -> bool:
    """k-connected: more than k vertices and no separator smaller than k."""
    if g.n() <= k:
        return False
    if not is_connected(g):
        return False
    if k <= 1:
        return True
    if k == 2:
        return not articulation_points(g)
    return find_vertex_cut(g, k) is None


def vertex_connectivity(g: Graph) -> int:
    if not is_connected(g):
        return 0
    n = g.n()
    for size in range(n - 1):
        for S in combinations(g.vertices, size):
            h = g.delete_vertices(S)
            if not is_connected(h):
                return size
    return n - 1


def bridges(g: Graph) -> List[Edge]:
    """Bridges via lowpoint DFS on edges."""
    disc = {}
    low = {}
    out: List[Edge] = []
    t = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    low[u] = min(low[u], disc[w])
                else:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, u, iter(sorted(g.neighbors(w)))))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] > disc[p]:
                    out.append((min(p, u), max(p, u)))
    return sorted(out)


def is_k_edge_connected(g: Graph, k: int) -> bool:
    """No edge cut of size < k (brute force above k = 2)."""
    if g.n() < 2 or not is_connected(g):
        return False
    if k <= 1:
        return True
    if k == 2:
        return not bridges(g)
    es = g.edges()
    for size in range(1, k):
        for F in combinations(es, size):
            if not is_connected(g.delete_edges(F)):
                return False
    return True


def two_edge_connected_components(g: Graph) -> List[frozenset]:
    """Components left after deleting all bridges."""
    return connected_components(g.delete_edges(bridges(g)))


def separates(g: Graph, removed: Iterable[int], a: int, b: int) -> bool:
    h = g.delete_vertices(removed)
    for comp in connected_components(h):
        if a in comp:
            return b not in comp
    raise ValueError("a was removed")
