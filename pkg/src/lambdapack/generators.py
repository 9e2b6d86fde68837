"""Graph families and seeded random instances.

All random generators take an explicit integer seed and draw from a
private ``random.Random``, so equal seeds give identical graphs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .connectivity import is_k_connected
from .errors import GraphError, PreconditionError
from .graph import Edge, Graph, complete_graph, cycle_graph, edge, find_claw, is_connected, line_graph

RETRY_CAP = 10_000


# -- cubic multigraphs and triangle blow-ups -------------------------------

@dataclass(frozen=True)
class CubicMultigraph:
    n: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        deg = [0] * self.n
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {(u, v)} out of range")
            deg[u] += 1
            deg[v] += 1
        bad = [i for i, d in enumerate(deg) if d != 3]
        if bad:
            raise GraphError(f"not cubic: vertex {bad[0]} has degree {deg[bad[0]]}")

    def is_connected(self) -> bool:
        return self.edge_connectivity_at_least(1)

    def edge_connectivity_at_least(self, k: int) -> bool:
        """No set of fewer than ``k`` edges disconnects the multigraph."""
        idx = range(len(self.edges))
        for size in range(k):
            for cut in combinations(idx, size):
                kept = [e for i, e in enumerate(self.edges) if i not in cut]
                if not is_connected(Graph(range(self.n), kept)):
                    return False
        return True

    def is_simple(self) -> bool:
        return len({edge(u, v) for u, v in self.edges}) == len(self.edges)

    def canonical_edges(self) -> List[Tuple[int, int]]:
        return sorted(edge(u, v) for u, v in self.edges)


THETA = CubicMultigraph(2, ((0, 1), (0, 1), (0, 1)))
K4_MULTI = CubicMultigraph(4, tuple(combinations(range(4), 2)))


def gen_delta(F: CubicMultigraph) -> Graph:
    """Replace every vertex ``u`` by the triangle ``3u, 3u+1, 3u+2``.

    Edge number ``i`` of ``F`` uses the next free corner at each end, so
    parallel edges land on distinct corners.
    """
    port = [0] * F.n
    es = []
    for u in range(F.n):
        es += [(3 * u, 3 * u + 1), (3 * u + 1, 3 * u + 2), (3 * u, 3 * u + 2)]
    for u, v in F.edges:
        es.append((3 * u + port[u], 3 * v + port[v]))
        port[u] += 1
        port[v] += 1
    g = Graph(range(3 * F.n), es)
    if not is_delta_graph(g):
        raise GraphError("blow-up is not a Δ-graph (multigraph had a loop?)")
    return g


def triangles(g: Graph) -> List[Tuple[int, int, int]]:
    out = set()
    for u, v in g.edges():
        for w in g.neighbors(u) & g.neighbors(v):
            out.add(tuple(sorted((u, v, w))))
    return sorted(out)


def is_delta_graph(g: Graph) -> bool:
    """Cubic with every vertex in exactly one triangle."""
    if g.n() == 0 or not g.is_regular(3):
        return False
    count: Dict[int, int] = {v: 0 for v in g.vertices}
    for t in triangles(g):
        for v in t:
            count[v] += 1
    return all(c == 1 for c in count.values())


def delta_preimage(g: Graph) -> Tuple[CubicMultigraph, Dict[int, int]]:
    """Contract the triangles of a Δ-graph; returns F and vertex->node map."""
    if not is_delta_graph(g):
        raise PreconditionError("not a Δ-graph")
    ts = triangles(g)
    where = {v: i for i, t in enumerate(ts) for v in t}
    es = [(where[u], where[v]) for u, v in g.edges() if where[u] != where[v]]
    return CubicMultigraph(len(ts), tuple(es)), where


def gen_random_cubic(n: int, seed: int, simple: bool = False) -> CubicMultigraph:
    """Configuration model; loops rejected, parallel edges kept unless ``simple``."""
    if n <= 0 or n % 2:
        raise PreconditionError("a cubic graph needs a positive even number of vertices")
    if simple and n < 4:
        raise PreconditionError("a simple cubic graph needs at least 4 vertices")
    rng = random.Random(seed)
    for _ in range(RETRY_CAP):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        pairs = [(stubs[2 * i], stubs[2 * i + 1]) for i in range(len(stubs) // 2)]
        if any(u == v for u, v in pairs):
            continue
        if simple and len({edge(u, v) for u, v in pairs}) != len(pairs):
            continue
        return CubicMultigraph(n, tuple(pairs))
    raise PreconditionError("configuration model retry cap reached")


def gen_random_cubic_connected(n: int, seed: int, k: int = 1, simple: bool = False) -> CubicMultigraph:
    """Rejection-sample a cubic multigraph with edge connectivity >= k."""
    rng = random.Random(seed)
    for _ in range(RETRY_CAP):
        F = gen_random_cubic(n, rng.getrandbits(63), simple)
        if F.edge_connectivity_at_least(k):
            return F
    raise PreconditionError(f"no {k}-connected cubic graph on {n} vertices within the retry cap")


def cubic_graph(F: CubicMultigraph) -> Graph:
    if not F.is_simple():
        raise PreconditionError("multigraph has parallel edges")
    return Graph(range(F.n), F.edges)


# -- named small graphs ------------------------------------------------------

def gen_cycle(n: int) -> Graph:
    return cycle_graph(n)


def gen_net() -> Graph:
    """Triangle 0,1,2 with leaves 3,4,5 at 0,1,2 respectively."""
    return Graph(range(6), [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def gen_prism() -> Graph:
    return gen_delta(THETA)


def gen_claw() -> Graph:
    return Graph(range(4), [(0, 1), (0, 2), (0, 3)])


# -- family S ----------------------------------------------------------------

Slot = Union[None, str, "Tri"]


@dataclass
class Tri:
    """A triangle node of a family-S recipe.

    ``slots`` describes the corners not used to reach the parent: each is
    ``None`` (bare corner), ``"leaf"`` (pendant vertex) or a child ``Tri``
    joined by an edge to that child's first corner.  The root has three
    slots; every other node has two.
    """

    slots: List[Slot] = field(default_factory=lambda: [None, None, None])


@dataclass
class FamilyRecipe:
    family: str
    params: Dict[str, object]

    def build(self):
        return build_family(self)


def familyS_violations(g: Graph) -> List[str]:
    """Which of the four defining conditions fail (empty list: member)."""
    bad = []
    if g.n() == 0 or not is_connected(g):
        bad.append("alpha1")
    if g.max_degree() > 3:
        bad.append("alpha2")
    count = {v: 0 for v in g.vertices}
    for t in triangles(g):
        for v in t:
            count[v] += 1
    if any(g.degree(v) in (2, 3) and count[v] != 1 for v in g.vertices):
        bad.append("alpha3")
    if len(g.leaves()) < 3:
        bad.append("alpha4")
    return bad


def gen_familyS(root: Tri, extra_links: Sequence[Tuple[int, int, int, int]] = ()) -> Graph:
    """Expand a tree of triangles; ``extra_links`` join bare corners (tri, corner, tri, corner)."""
    es: List[Edge] = []
    nxt = [0]
    corners: List[Tuple[int, int, int]] = []
    slot_of: Dict[Tuple[int, int], Slot] = {}

    def new_tri() -> int:
        a = nxt[0]
        nxt[0] += 3
        es.extend([(a, a + 1), (a + 1, a + 2), (a, a + 2)])
        corners.append((a, a + 1, a + 2))
        return len(corners) - 1

    def expand(node: Tri, is_root: bool) -> int:
        ti = new_tri()
        free = [0, 1, 2] if is_root else [1, 2]
        if len(node.slots) != len(free):
            raise PreconditionError(f"triangle node needs {len(free)} slots, got {len(node.slots)}")
        for corner, slot in zip(free, node.slots):
            v = corners[ti][corner]
            slot_of[(ti, corner)] = slot
            if slot == "leaf":
                leaf = nxt[0]
                nxt[0] += 1
                es.append((v, leaf))
            elif isinstance(slot, Tri):
                child = expand(slot, False)
                es.append((v, corners[child][0]))
            elif slot is not None:
                raise PreconditionError(f"unknown slot {slot!r}")
        return ti

    expand(root, True)
    for ti, ci, tj, cj in extra_links:
        for t, c in ((ti, ci), (tj, cj)):
            if slot_of.get((t, c), "used") is not None:
                raise PreconditionError(f"corner {c} of triangle {t} is not bare")
            slot_of[(t, c)] = "link"
        es.append((corners[ti][ci], corners[tj][cj]))
    g = Graph(range(nxt[0]), es)
    bad = familyS_violations(g)
    if bad:
        raise PreconditionError(f"recipe violates {', '.join(bad)}")
    return g


def net_recipe() -> Tri:
    return Tri(["leaf", "leaf", "leaf"])


def random_familyS_recipe(rng: random.Random, triangles_count: int, leaves: Optional[int] = None) -> Tri:
    """Random tree of ``triangles_count`` triangles with ``leaves`` pendant vertices."""
    if triangles_count < 1:
        raise PreconditionError("need at least one triangle")
    nodes = [Tri([None, None, None])]
    open_slots = [(0, 0), (0, 1), (0, 2)]
    for _ in range(triangles_count - 1):
        i = rng.randrange(len(open_slots))
        owner, k = open_slots.pop(i)
        child = Tri([None, None])
        nodes[owner].slots[k] = child
        nodes.append(child)
        idx = len(nodes) - 1
        open_slots += [(idx, 0), (idx, 1)]
    if leaves is None:
        leaves = rng.randrange(3, len(open_slots) + 1)
    if not 3 <= leaves <= len(open_slots):
        raise PreconditionError("leaf count does not fit the tree")
    for owner, k in rng.sample(open_slots, leaves):
        nodes[owner].slots[k] = "leaf"
    return nodes[0]


def gen_random_familyS(triangles_count: int, seed: int, leaves: Optional[int] = None) -> Graph:
    return gen_familyS(random_familyS_recipe(random.Random(seed), triangles_count, leaves))


# -- counterexample constructions -------------------------------------------

def gen_constructionR(nA: int, nB: int) -> Tuple[Graph, Edge, Edge]:
    """Two cycles and a vertex z joined to both ends of one edge of each."""
    if nA < 3 or nB < 3:
        raise PreconditionError("cycle sizes must be at least 3")
    A = [(i, (i + 1) % nA) for i in range(nA)]
    B = [(nA + i, nA + (i + 1) % nB) for i in range(nB)]
    z = nA + nB
    a, b = (0, 1), (nA, nA + 1)
    g = Graph(range(nA + nB + 1), A + B + [(z, 0), (z, 1), (z, nA), (z, nA + 1)])
    return g, a, b


def constructionR_claim_applies(nA: int, nB: int) -> bool:
    return nA % 3 == 1 and nB % 3 == 1


def gen_constructionQ(nA: int, nB: int) -> Tuple[Graph, Edge]:
    """Two cycles and an edge z1z2 whose ends see both ends of one edge of each."""
    if nA < 3 or nB < 3:
        raise PreconditionError("cycle sizes must be at least 3")
    A = [(i, (i + 1) % nA) for i in range(nA)]
    B = [(nA + i, nA + (i + 1) % nB) for i in range(nB)]
    z1, z2 = nA + nB, nA + nB + 1
    extra = [(z1, z2)] + [(z, w) for z in (z1, z2) for w in (0, 1, nA, nA + 1)]
    return Graph(range(nA + nB + 2), A + B + extra), (z1, z2)


def constructionQ_claim_applies(nA: int, nB: int) -> bool:
    return nA % 3 == 2 and nB % 3 == 2


def gen_constructionH() -> Tuple[Graph, Tuple[int, int, int]]:
    """Net on 0..5 (leaves 3,4,5) plus a triangle 6,7,8; leaf i sees t_j for j != i."""
    net = gen_net()
    es = net.edges() + [(6, 7), (7, 8), (6, 8)]
    leaves = (3, 4, 5)
    ts = (6, 7, 8)
    for i in range(3):
        for j in range(3):
            if i != j:
                es.append((leaves[i], ts[j]))
    return Graph(range(9), es), ts


def replace_vertex_by_triangle(g: Graph, x: int) -> Graph:
    """Blow a degree-3 vertex up into a triangle."""
    ns = sorted(g.neighbors(x))
    if len(ns) != 3:
        raise PreconditionError("only degree-3 vertices can be replaced")
    base = max(g.vertices) + 1
    t = [base, base + 1, base + 2]
    es = [e for e in g.edges() if x not in e]
    es += [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]
    es += [(ns[i], t[i]) for i in range(3)]
    return Graph([v for v in g.vertices if v != x] + t, es)


# -- random claw-free graphs -------------------------------------------------

def _random_connected_graph(rng: random.Random, n_vertices: int, m: int) -> nx.Graph:
    """Random spanning tree plus extra random edges, ``m`` edges total."""
    h = nx.Graph()
    h.add_nodes_from(range(n_vertices))
    order = list(range(n_vertices))
    rng.shuffle(order)
    for i in range(1, n_vertices):
        h.add_edge(order[i], order[rng.randrange(i)])
    pairs = [p for p in combinations(range(n_vertices), 2) if not h.has_edge(*p)]
    rng.shuffle(pairs)
    h.add_edges_from(pairs[: max(0, m - h.number_of_edges())])
    return h


def gen_random_clawfree(n: int, seed: int, method: str = "linegraph") -> Graph:
    """Random connected claw-free graph on ``n`` vertices.

    ``linegraph``: line graph of a random connected graph with ``n`` edges.
    ``local-complete``: random connected graph whose claws are repaired by
    adding an edge between two claw leaves until none remains.
    """
    if n < 1:
        raise PreconditionError("n must be positive")
    rng = random.Random(seed)
    if method == "linegraph":
        if n < 2:
            return Graph([0])
        for _ in range(RETRY_CAP):
            k = rng.randint(3, n + 1)
            if k - 1 > n or n > k * (k - 1) // 2:
                continue
            h = _random_connected_graph(rng, k, n)
            lg, _ = line_graph(Graph.from_networkx(h))
            return lg
        raise PreconditionError("line-graph sampler retry cap reached")
    if method == "local-complete":
        extra = rng.randint(0, n)
        h = _random_connected_graph(rng, n, n - 1 + extra)
        g = Graph.from_networkx(h)
        while True:
            w = find_claw(g)
            if w is None:
                return g
            _, a, b, c = w
            u, v = rng.choice([(a, b), (a, c), (b, c)])
            g = g.add_edges([(u, v)])
    raise PreconditionError(f"unknown method {method!r}")


def gen_random_clawfree_filtered(n: int, seed: int, k: int = 2, method: Optional[str] = None) -> Graph:
    """Claw-free and k-connected, by rejection (retry cap 10^4)."""
    rng = random.Random(seed)
    for _ in range(RETRY_CAP):
        m = method or rng.choice(["linegraph", "local-complete"])
        g = gen_random_clawfree(n, rng.getrandbits(63), m)
        if g.n() == n and is_k_connected(g, k):
            return g
    raise PreconditionError(f"no {k}-connected claw-free graph found within the retry cap")


# -- cacti -------------------------------------------------------------------

def gen_cactus(core: int, attach: Sequence[int], core_kind: str = "complete") -> Graph:
    """Claw-free cactus: a clique (or net-like triangle) core with pendant leaves.

    ``attach`` lists the core vertices receiving one pendant leaf each;
    at least three distinct core vertices are required.
    """
    if core_kind != "complete":
        raise PreconditionError(f"unknown core kind {core_kind!r}")
    if core < 3:
        raise PreconditionError("core must have at least 3 vertices")
    att = sorted(set(attach))
    if len(att) < 3 or len(att) != len(attach) or any(not 0 <= a < core for a in att):
        raise PreconditionError("need at least three distinct core vertices")
    g = complete_graph(core)
    leaf = core
    es = []
    for a in att:
        es.append((a, leaf))
        leaf += 1
    return g.add_edges(es)


# -- exhaustive enumeration --------------------------------------------------

def _refine(adj: List[int], n: int) -> Tuple[Tuple, List[int]]:
    """Colour refinement on bitmask adjacency; returns (invariant, colours).

    The invariant records every round's sorted signature list, so two
    graphs with equal invariants also agree on what each colour means.
    """
    col = [bin(adj[v]).count("1") for v in range(n)]
    rounds = []
    while True:
        sig = [(col[v], tuple(sorted(col[u] for u in range(n) if adj[v] >> u & 1))) for v in range(n)]
        order = sorted(set(sig))
        rounds.append(tuple(sorted(sig)))
        rank = {s: i for i, s in enumerate(order)}
        new = [rank[s] for s in sig]
        if len(order) == len(set(col)):
            return tuple(rounds), new
        col = new


def _bitmask_adj(g: Graph) -> List[int]:
    adj = [0] * g.n()
    for u, v in g.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _isomorphic(a: List[int], ca: List[int], b: List[int], cb: List[int]) -> bool:
    n = len(a)
    order = sorted(range(n), key=lambda v: (ca.count(ca[v]), v))
    image = [-1] * n
    used = [False] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or cb[w] != ca[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if (a[v] >> u & 1) != (b[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if rec(i + 1):
                    return True
                used[w] = False
        image[v] = -1
        return False

    return rec(0)


def enumerate_connected_clawfree(n_max: int) -> Iterator[Graph]:
    """All connected claw-free graphs on 1..n_max vertices, one per iso class.

    Claw-freeness is hereditary and every connected graph has a vertex
    whose removal keeps it connected, so each class on n vertices arises
    from one on n - 1 vertices by adding a vertex with some neighbourhood.
    """
    level = [Graph([0])]
    yield level[0]
    for n in range(2, n_max + 1):
        buckets: Dict[Tuple, List[Tuple[List[int], List[int]]]] = {}
        new_level: List[Graph] = []
        for g in level:
            old = list(range(n - 1))
            adj = {v: g.neighbors(v) for v in old}
            base = _bitmask_adj(g) + [0]
            for size in range(1, n):
                for S in combinations(old, size):
                    if not _extension_clawfree(adj, set(S)):
                        continue
                    bm = list(base)
                    for s in S:
                        bm[s] |= 1 << (n - 1)
                        bm[n - 1] |= 1 << s
                    inv, col = _refine(bm, n)
                    bucket = buckets.setdefault(inv, [])
                    if any(_isomorphic(bm, col, ob, oc) for ob, oc in bucket):
                        continue
                    bucket.append((bm, col))
                    new_level.append(g.add_edges((n - 1, s) for s in S))
        level = new_level
        yield from level


def _extension_clawfree(adj: Dict[int, frozenset], S: set) -> bool:
    # new vertex as centre: S must have no independent triple
    for a, b, c in combinations(sorted(S), 3):
        if not (b in adj[a] or c in adj[a] or c in adj[b]):
            return False
    # old vertex u in S as centre with the new vertex as one leaf
    for u in S:
        outside = sorted(adj[u] - S)
        for a, b in combinations(outside, 2):
            if b not in adj[a]:
                return False
    return True


def connected_clawfree_counts(n_max: int) -> List[int]:
    counts = [0] * (n_max + 1)
    for g in enumerate_connected_clawfree(n_max):
        counts[g.n()] += 1
    return counts[1:]


# -- recipe dispatch ---------------------------------------------------------

FAMILIES = (
    "net", "cactus", "delta", "familyS", "constructionR", "constructionQ", "constructionH",
    "cubicRandom", "clawfreeRandom", "cycle", "prism",
)


def build_family(r: FamilyRecipe):
    """Build one instance; returns (graph, manifest extras)."""
    p = dict(r.params)
    seed = int(p.get("seed", 0))
    fam = r.family
    if fam == "net":
        return gen_net(), {}
    if fam == "cycle":
        return gen_cycle(int(p["n"])), {}
    if fam == "prism":
        return gen_prism(), {}
    if fam == "cactus":
        return gen_cactus(int(p["core"]), list(p["attach"])), {}
    if fam == "delta":
        F = gen_random_cubic_connected(int(p["n"]), seed, int(p.get("k", 2)))
        return gen_delta(F), {"preimage": [list(e) for e in F.edges]}
    if fam == "familyS":
        return gen_random_familyS(int(p["triangles"]), seed, p.get("leaves")), {}
    if fam == "constructionR":
        g, a, b = gen_constructionR(int(p["nA"]), int(p["nB"]))
        return g, {"a": list(a), "b": list(b)}
    if fam == "constructionQ":
        g, e = gen_constructionQ(int(p["nA"]), int(p["nB"]))
        return g, {"e": list(e)}
    if fam == "constructionH":
        g, t = gen_constructionH()
        return g, {"T": list(t)}
    if fam == "cubicRandom":
        F = gen_random_cubic_connected(int(p["n"]), seed, int(p.get("k", 1)), simple=True)
        return cubic_graph(F), {}
    if fam == "clawfreeRandom":
        return gen_random_clawfree(int(p["n"]), seed, str(p.get("method", "linegraph"))), {}
    raise PreconditionError(f"unknown family {fam!r}; valid: {', '.join(FAMILIES)}")
