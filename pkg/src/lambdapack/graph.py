"""Immutable undirected simple graphs with stable integer vertex labels.

Editing operations never mutate; they return a new ``Graph`` whose
surviving vertices keep their labels, so a vertex of ``G`` is the same
vertex in ``G - x`` or ``G - L``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Set, Tuple

from .errors import GraphError

Edge = Tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalize an unordered vertex pair to ``(min, max)``."""
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph; value semantics, hashable."""

    __slots__ = ("_adj", "_hash", "_vertices")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Tuple[int, int]] = ()):
        adj: Dict[int, Set[int]] = {}
        for v in vertices:
            v = int(v)
            if v < 0:
                raise GraphError(f"negative vertex label {v}")
            adj.setdefault(v, set())
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u < 0 or v < 0:
                raise GraphError(f"negative vertex label in edge {(u, v)}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._adj: Dict[int, FrozenSet[int]] = {v: frozenset(n) for v, n in adj.items()}
        self._hash: Optional[int] = None
        self._vertices: Optional[Tuple[int, ...]] = None

    @classmethod
    def _from_adj(cls, adj: Mapping[int, FrozenSet[int]]) -> "Graph":
        g = cls.__new__(cls)
        g._adj = dict(adj)
        g._hash = None
        g._vertices = None
        return g

    @classmethod
    def from_edges(cls, edges: Iterable[Tuple[int, int]], n: Optional[int] = None) -> "Graph":
        """Build from an edge list; ``n`` adds isolated vertices ``0..n-1``."""
        return cls(range(n) if n is not None else (), edges)

    # -- queries ---------------------------------------------------------
    @property
    def vertices(self) -> Tuple[int, ...]:
        if self._vertices is None:
            self._vertices = tuple(sorted(self._adj))
        return self._vertices

    def edges(self) -> List[Edge]:
        return sorted((u, v) for u, ns in self._adj.items() for v in ns if u < v)

    def n(self) -> int:
        return len(self._adj)

    def m(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def neighbors(self, v: int) -> FrozenSet[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"vertex not in graph: {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> Dict[int, int]:
        return {v: len(ns) for v, ns in self._adj.items()}

    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def is_regular(self, d: int) -> bool:
        return all(len(ns) == d for ns in self._adj.values())

    def leaves(self) -> List[int]:
        return [v for v in self.vertices if len(self._adj[v]) == 1]

    # -- editing (copy on write) -----------------------------------------
    def delete_vertices(self, S: Iterable[int]) -> "Graph":
        S = set(S)
        missing = S - self._adj.keys()
        if missing:
            raise GraphError(f"vertex not in graph: {sorted(missing)[0]}")
        if not S:
            return self
        return Graph._from_adj({v: ns - S for v, ns in self._adj.items() if v not in S})

    def induced_subgraph(self, S: Iterable[int]) -> "Graph":
        S = set(S)
        missing = S - self._adj.keys()
        if missing:
            raise GraphError(f"vertex not in graph: {sorted(missing)[0]}")
        return Graph._from_adj({v: self._adj[v] & S for v in S})

    def delete_edges(self, E: Iterable[Tuple[int, int]]) -> "Graph":
        adj = {v: set(ns) for v, ns in self._adj.items()}
        for u, v in E:
            if not self.has_edge(u, v):
                raise GraphError(f"edge not in graph: {(u, v)}")
            adj[u].discard(v)
            adj[v].discard(u)
        return Graph._from_adj({v: frozenset(ns) for v, ns in adj.items()})

    def add_edges(self, E: Iterable[Tuple[int, int]]) -> "Graph":
        adj = {v: set(ns) for v, ns in self._adj.items()}
        for u, v in E:
            u, v = edge(u, v)
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return Graph._from_adj({v: frozenset(ns) for v, ns in adj.items()})

    def add_vertices(self, S: Iterable[int]) -> "Graph":
        adj = dict(self._adj)
        for v in S:
            adj.setdefault(int(v), frozenset())
        return Graph._from_adj(adj)

    def relabeled(self) -> Tuple["Graph", Dict[int, int]]:
        """Return a copy on ``0..n-1`` (sorted order) and the old->new map."""
        index = {v: i for i, v in enumerate(self.vertices)}
        return Graph(range(len(index)), ((index[u], index[v]) for u, v in self.edges())), index

    def is_relabeling_of_range(self) -> bool:
        return self.vertices == tuple(range(len(self._adj)))

    # -- value semantics -------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._adj.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n()}, m={self.m()}, edges={self.edges()!r})"

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(self.vertices)
        h.add_edges_from(self.edges())
        return h

    @classmethod
    def from_networkx(cls, h) -> "Graph":
        return cls(h.nodes(), h.edges())


# -- module-level operations ------------------------------------------------

def neighbors(g: Graph, v: int) -> FrozenSet[int]:
    return g.neighbors(v)


def delete_vertices(g: Graph, S: Iterable[int]) -> Graph:
    return g.delete_vertices(S)


def delete_edges(g: Graph, E: Iterable[Tuple[int, int]]) -> Graph:
    return g.delete_edges(E)


def find_claw(g: Graph) -> Optional[Tuple[int, int, int, int]]:
    """Return ``(center, a, b, c)`` of an induced claw, or ``None``."""
    for x in g.vertices:
        ns = sorted(g.neighbors(x))
        if len(ns) < 3:
            continue
        for a, b, c in combinations(ns, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return (x, a, b, c)
    return None


def is_claw_free(g: Graph) -> Tuple[bool, Optional[Tuple[int, int, int, int]]]:
    """Claw-freeness with a witness ``(center, a, b, c)`` when it fails."""
    w = find_claw(g)
    return w is None, w


def clawfree(g: Graph) -> bool:
    return find_claw(g) is None


def induced_subgraph_of_edgeset(g: Graph, E: Iterable[Tuple[int, int]]) -> Graph:
    """The graph formed by the edges ``E`` and their end-vertices."""
    E = [edge(u, v) for u, v in E]
    for u, v in E:
        if not g.has_edge(u, v):
            raise GraphError(f"edge not in graph: {(u, v)}")
    return Graph((), E)


def connected_components(g: Graph) -> List[FrozenSet[int]]:
    """Components as vertex sets, ordered by their smallest vertex."""
    seen: Set[int] = set()
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    """True for a nonempty graph with one component."""
    return g.n() > 0 and len(connected_components(g)) == 1


def line_graph(g: Graph) -> Tuple[Graph, Dict[Edge, int]]:
    """Line graph plus the bijection ``E(g) -> V(L(g))``.

    Edges are numbered in sorted order, so the map is deterministic.
    """
    es = g.edges()
    index = {e: i for i, e in enumerate(es)}
    incident: Dict[int, List[int]] = {v: [] for v in g.vertices}
    for i, (u, v) in enumerate(es):
        incident[u].append(i)
        incident[v].append(i)
    ledges = set()
    for ids in incident.values():
        for a, b in combinations(ids, 2):
            ledges.add((a, b))
    return Graph(range(len(es)), ledges), index


def complete_graph(n: int, offset: int = 0) -> Graph:
    vs = range(offset, offset + n)
    return Graph(vs, combinations(vs, 2))


def cycle_graph(n: int, offset: int = 0) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(range(offset, offset + n), ((offset + i, offset + (i + 1) % n) for i in range(n)))


def path_graph(n: int, offset: int = 0) -> Graph:
    return Graph(range(offset, offset + n), ((offset + i, offset + i + 1) for i in range(n - 1)))


def disjoint_union(*graphs: Graph) -> Tuple[Graph, List[Dict[int, int]]]:
    """Relabel consecutively and union; returns the per-graph label maps."""
    vs: List[int] = []
    es: List[Edge] = []
    maps = []
    offset = 0
    for h in graphs:
        m = {v: offset + i for i, v in enumerate(h.vertices)}
        vs.extend(m.values())
        es.extend((m[u], m[v]) for u, v in h.edges())
        maps.append(m)
        offset += h.n()
    return Graph(vs, es), maps


def validate_graph(g: Graph) -> None:
    """Debug validator: symmetric adjacency, no loops."""
    for v, ns in g._adj.items():
        if v in ns:
            raise GraphError(f"loop at {v}")
        for w in ns:
            if w not in g._adj or v not in g._adj[w]:
                raise GraphError(f"asymmetric adjacency {v}-{w}")
