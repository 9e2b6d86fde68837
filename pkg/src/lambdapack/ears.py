"""Longest-cycle/longest-ear assemblies and claw-free frames.

The assembly starts from a longest cycle (optionally one passing through
both ends of an anchor edge) and repeatedly attaches a longest path whose
interior is new and whose two ends are already covered.  Both searches
are exact DFS with a reachability bound; a node budget guards against
blow-up and marks the result inexact instead of looping forever.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .connectivity import is_two_connected
from .errors import InternalAssertionError, PreconditionError
from .graph import Edge, Graph, clawfree, edge

DEFAULT_BUDGET = 2_000_000
HEURISTIC_ROUNDS = 20_000


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n: int):
        self.left = n

    def spend(self) -> bool:
        self.left -= 1
        return self.left >= 0


class _Bits:
    """Bitmask view of a graph for the exponential searches."""

    def __init__(self, g: Graph):
        self.labels = list(g.vertices)
        self.index = {v: i for i, v in enumerate(self.labels)}
        self.adj = [0] * len(self.labels)
        for u, v in g.edges():
            i, j = self.index[u], self.index[v]
            self.adj[i] |= 1 << j
            self.adj[j] |= 1 << i

    def mask(self, vs) -> int:
        m = 0
        for v in vs:
            m |= 1 << self.index[v]
        return m

    def reach_mask(self, start: int, allowed: int) -> int:
        """Vertices of ``allowed`` reachable from ``start`` (start excluded)."""
        seen = 0
        frontier = self.adj[start] & allowed
        while frontier:
            seen |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self.adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & allowed & ~seen
        return seen

    def reach(self, start: int, allowed: int) -> int:
        return bin(self.reach_mask(start, allowed)).count("1")

    def peel(self, allowed: int, ends: int) -> int:
        """Drop vertices with fewer than two neighbours in allowed + ends, repeatedly."""
        changed = True
        while changed:
            changed = False
            m = allowed
            while m:
                low = m & -m
                w = low.bit_length() - 1
                m ^= low
                if bin(self.adj[w] & (allowed | ends)).count("1") < 2:
                    allowed &= ~low
                    changed = True
        return allowed

    def ordered(self, u: int, allowed: int) -> List[int]:
        """Neighbours of ``u`` in ``allowed``, fewest onward options first."""
        out = []
        m = self.adj[u] & allowed
        while m:
            low = m & -m
            w = low.bit_length() - 1
            out.append((bin(self.adj[w] & allowed).count("1"), w))
            m ^= low
        out.sort()
        return [w for _, w in out]


def _hamiltonian_heuristic(B: _Bits, rounds: int) -> Optional[List[int]]:
    """Rotation-extension search for a Hamiltonian cycle (seeded, bounded)."""
    n = len(B.adj)
    if n < 3:
        return None
    rng = random.Random(n)
    for _ in range(max(1, rounds // (n * n))):
        path = [rng.randrange(n)]
        on = 1 << path[0]
        for _ in range(n * n):
            end = path[-1]
            ext = B.adj[end] & ~on
            if ext:
                opts = [i for i in range(n) if ext >> i & 1]
                w = rng.choice(opts)
                path.append(w)
                on |= 1 << w
                continue
            if len(path) == n and B.adj[end] >> path[0] & 1:
                return path
            pos = [i for i, v in enumerate(path[:-2]) if B.adj[end] >> v & 1]
            if not pos:
                break
            i = rng.choice(pos)
            path[i + 1:] = path[i + 1:][::-1]
    return None


def longest_cycle(
    g: Graph,
    through: Sequence[int] = (),
    budget: int = DEFAULT_BUDGET,
) -> Tuple[Optional[List[int]], bool]:
    """Longest cycle containing every vertex of ``through``.

    Returns ``(cycle, exact)``; ``cycle`` lists vertices in order and is
    ``None`` if no such cycle exists.  ``exact`` is False when the budget
    ran out before the search space was exhausted.
    """
    B = _Bits(g)
    n = g.n()
    req = B.mask(through)
    best: List[Optional[List[int]]] = [None]
    bud = _Budget(budget)
    exhausted = [True]
    full = (1 << n) - 1
    ham = _hamiltonian_heuristic(B, HEURISTIC_ROUNDS)
    if ham is not None:
        return [B.labels[i] for i in ham], True

    if req:
        starts = [B.index[min(through)]]
    else:
        starts = sorted(range(n), key=lambda i: B.labels[i])
    for s in starts:
        if best[0] is not None and len(best[0]) == n:
            break
        if req:
            allowed = full & ~(1 << s)
        else:
            allowed = B.mask(v for v in g.vertices if v > B.labels[s])
        target_max = bin(allowed).count("1") + 1
        if best[0] is not None and len(best[0]) >= target_max:
            continue
        path = [s]

        def dfs(u: int, free: int) -> bool:
            if not bud.spend():
                exhausted[0] = False
                return True
            cur_best = len(best[0]) if best[0] else 2
            closes = B.adj[u] >> s & 1
            usable = B.peel(free, (1 << u) | (1 << s))
            r = B.reach_mask(u, usable)
            if not (closes or B.adj[s] & r):
                return False
            if len(path) + bin(r).count("1") <= cur_best:
                return False
            if closes and len(path) >= 3 and len(path) > cur_best:
                if not req or (req & ~_path_mask(path)) == 0:
                    best[0] = [B.labels[i] for i in path]
                    cur_best = len(path)
                    if cur_best == target_max:
                        return True
            for w in B.ordered(u, usable):
                path.append(w)
                stop = dfs(w, free & ~(1 << w))
                path.pop()
                if stop:
                    return True
            return False

        if dfs(s, allowed) and not exhausted[0]:
            break
    return best[0], exhausted[0]


def _path_mask(path: List[int]) -> int:
    m = 0
    for i in path:
        m |= 1 << i
    return m


def longest_ear(
    g: Graph, covered: FrozenSet[int], budget: int = DEFAULT_BUDGET
) -> Tuple[Optional[List[int]], bool]:
    """Longest path with both ends in ``covered`` and a nonempty new interior."""
    B = _Bits(g)
    cov = B.mask(covered)
    outside = ((1 << g.n()) - 1) & ~cov
    best: List[Optional[List[int]]] = [None]
    bud = _Budget(budget)
    exhausted = [True]
    cap = bin(outside).count("1") + 2
    for u in sorted(covered):
        ui = B.index[u]
        if not B.adj[ui] & outside:
            continue
        path = [ui]

        def dfs(x: int, free: int) -> bool:
            if not bud.spend():
                exhausted[0] = False
                return True
            cur = len(best[0]) if best[0] else 2
            if len(path) + 1 + B.reach(x, free) <= cur:
                return False
            if len(path) + 1 > cur:
                ends = B.adj[x] & cov & ~(1 << ui)
                if ends:
                    end = min(B.labels[i] for i in range(g.n()) if ends >> i & 1)
                    best[0] = [B.labels[i] for i in path] + [end]
                    cur = len(best[0])
                    if cur == cap:
                        return True
            for w in B.ordered(x, free):
                path.append(w)
                stop = dfs(w, free & ~(1 << w))
                path.pop()
                if stop:
                    return True
            return False

        stop = False
        for o in B.ordered(ui, outside):
            path.append(o)
            stop = dfs(o, outside & ~(1 << o))
            path.pop()
            if stop:
                break
        if stop:
            break
    return best[0], exhausted[0]


@dataclass
class EarAssembly:
    base_cycle: List[int]
    ears: List[List[int]]
    final_graph: Graph
    exact: bool = True
    anchor: Optional[Edge] = None

    @property
    def r(self) -> int:
        return len(self.ears)

    @property
    def last(self) -> List[int]:
        """The last piece added: the last ear, or the base cycle if none."""
        return self.ears[-1] if self.ears else self.base_cycle

    def to_json(self) -> dict:
        return {
            "base_cycle": self.base_cycle,
            "ears": self.ears,
            "r": self.r,
            "exact": self.exact,
            "frame_edges": [list(e) for e in self.final_graph.edges()],
        }


def cycle_edges(cyc: Sequence[int]) -> List[Edge]:
    return [edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]


def path_edges(p: Sequence[int]) -> List[Edge]:
    return [edge(p[i], p[i + 1]) for i in range(len(p) - 1)]


def procedure_E(
    g: Graph, anchor: Optional[Tuple[int, int]] = None, budget: int = DEFAULT_BUDGET
) -> EarAssembly:
    """Ear assembly from a longest cycle (through ``anchor``'s ends if given)."""
    if not is_two_connected(g):
        raise PreconditionError("procedure_E needs a 2-connected graph")
    through: Tuple[int, ...] = ()
    if anchor is not None:
        if not g.has_edge(*anchor):
            raise PreconditionError(f"anchor {anchor} is not an edge")
        anchor = edge(*anchor)
        through = anchor
    cyc, exact = longest_cycle(g, through, budget)
    if cyc is None:
        raise InternalAssertionError("2-connected graph without a cycle through the anchor")
    covered = frozenset(cyc)
    edges = cycle_edges(cyc)
    ears: List[List[int]] = []
    while len(covered) < g.n():
        ear, ex = longest_ear(g, covered, budget)
        exact = exact and ex
        if ear is None:
            raise InternalAssertionError("no ear attaches to a proper subgraph of a 2-connected graph")
        ears.append(ear)
        edges.extend(path_edges(ear))
        covered = covered | frozenset(ear)
    F = Graph(g.vertices, edges)
    return EarAssembly(list(cyc), ears, F, exact, anchor)


def is_frame(F: Graph, g: Graph) -> bool:
    """Minimal 2-connected spanning subgraph of ``g``."""
    if set(F.vertices) != set(g.vertices) or any(not g.has_edge(*e) for e in F.edges()):
        return False
    if not is_two_connected(F):
        return False
    return all(not is_two_connected(F.delete_edges([e])) for e in F.edges())


def is_clawfree_frame(F: Graph, g: Graph) -> bool:
    """Minimal 2-connected claw-free spanning subgraph of ``g``."""
    if set(F.vertices) != set(g.vertices) or any(not g.has_edge(*e) for e in F.edges()):
        return False
    if not (is_two_connected(F) and clawfree(F)):
        return False
    for e in F.edges():
        h = F.delete_edges([e])
        if is_two_connected(h) and clawfree(h):
            return False
    return True


@dataclass
class ClawFreeFrame:
    frame: Graph
    triangle_matching: List[Edge]
    assembly: EarAssembly
    n_valid_matchings: int = 1
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def closed(self) -> Graph:
        return self.frame.add_edges(self.triangle_matching)


MATCHING_SEARCH_LIMIT = 18


def _candidate_matching_edges(g: Graph, F: Graph) -> List[Edge]:
    deg = F.degrees()
    out = []
    for u, v in g.edges():
        if F.has_edge(u, v) or deg[u] > 2 or deg[v] > 2:
            continue
        if F.neighbors(u) & F.neighbors(v):
            out.append((u, v))
    return out


def _matchings(cands: List[Edge]):
    def rec(i: int, used: Set[int], acc: List[Edge]):
        if i == len(cands):
            yield list(acc)
            return
        yield from rec(i + 1, used, acc)
        u, v = cands[i]
        if u not in used and v not in used:
            used.add(u)
            used.add(v)
            acc.append((u, v))
            yield from rec(i + 1, used, acc)
            acc.pop()
            used.discard(u)
            used.discard(v)

    return rec(0, set(), [])


def clawfree_frame(g: Graph, budget: int = DEFAULT_BUDGET) -> ClawFreeFrame:
    """Frame ``F`` from the ear assembly plus the matching ``M`` closing its claws.

    ``M`` is searched among edges of ``g`` joining two vertices of frame
    degree at most 2 that share a frame neighbour; every matching that
    makes ``F + M`` a claw-free frame with maximum degree 3 is counted.
    """
    if not is_two_connected(g) or not clawfree(g):
        raise PreconditionError("clawfree_frame needs a 2-connected claw-free graph")
    if g.m() == g.n():
        raise PreconditionError("clawfree_frame is undefined for a cycle")
    asm = procedure_E(g, budget=budget)
    F = asm.final_graph
    checks = {"f1_max_degree_3": F.max_degree() <= 3, "frame": is_frame(F, g)}
    cands = _candidate_matching_edges(g, F)
    if len(cands) > MATCHING_SEARCH_LIMIT:
        raise InternalAssertionError(f"{len(cands)} candidate triangle edges; search limit exceeded")
    valid: List[List[Edge]] = []
    for M in _matchings(cands):
        H = F.add_edges(M)
        if H.max_degree() <= 3 and is_clawfree_frame(H, g):
            valid.append(M)
    if not valid:
        raise InternalAssertionError("no matching closes the frame to a claw-free frame")
    M = valid[0]
    H = F.add_edges(M)
    checks["f2_unique"] = len(valid) == 1
    checks["f2_triangles"] = _degree3_in_unique_triangle(H)
    if asm.ears:
        gone = asm.ears[-1]
        rest = g.delete_vertices(gone)
        checks["f3"] = rest.n() < 3 or is_clawfree_frame(H.delete_vertices(gone), rest)
    return ClawFreeFrame(F, M, asm, len(valid), checks)


def triangles_at(g: Graph, v: int) -> List[Tuple[int, int, int]]:
    ns = sorted(g.neighbors(v))
    return [tuple(sorted((v, a, b))) for a, b in combinations(ns, 2) if g.has_edge(a, b)]


def _degree3_in_unique_triangle(H: Graph) -> bool:
    for v in H.vertices:
        if H.degree(v) == 3 and len(triangles_at(H, v)) != 1:
            return False
        for t in triangles_at(H, v):
            if any(H.degree(x) != 3 for x in t):
                return False
    return True
