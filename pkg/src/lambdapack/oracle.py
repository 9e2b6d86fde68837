"""Exact exponential solvers used as ground truth.

All solvers work on bitmasks over a compact ``0..n-1`` indexing of the
input and refuse inputs above their cap rather than degrade.
"""

from __future__ import annotations

from functools import lru_cache
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

from .errors import OracleCapError, PreconditionError
from .graph import Edge, Graph, connected_components, edge
from .packing import LambdaPacking, NO_CONSTRAINT, PackingConstraint, Path3, paths_through_edge

DEFAULT_CAP = 24
DOMINATION_CAP = 30
MEMO_MAXSIZE = 1 << 24


class _Indexed:
    """Graph re-indexed to bit positions."""

    __slots__ = ("labels", "index", "adj")

    def __init__(self, g: Graph):
        self.labels = list(g.vertices)
        self.index = {v: i for i, v in enumerate(self.labels)}
        self.adj = [0] * len(self.labels)
        for u, v in g.edges():
            i, j = self.index[u], self.index[v]
            self.adj[i] |= 1 << j
            self.adj[j] |= 1 << i

    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def label(self, t: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(self.labels[i] for i in t)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_cap(g: Graph, cap: int) -> None:
    if g.n() > cap:
        raise OracleCapError(g.n(), cap)


def _max_paths(ix: _Indexed, induced: bool) -> Tuple[int, List[Tuple[int, int, int]]]:
    adj = ix.adj

    @lru_cache(maxsize=MEMO_MAXSIZE)
    def best(mask: int) -> Tuple[int, Optional[Tuple[int, int, int]], int]:
        # drop vertices isolated inside mask; they never help
        m = mask
        for i in _bits(mask):
            if not adj[i] & mask:
                m &= ~(1 << i)
        if m != mask:
            return best(m)
        if not mask:
            return (0, None, 0)
        ceiling = bin(mask).count("1") // 3
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        top = (0, None, 0)
        nv = adj[v] & rest
        # v as centre
        ns = list(_bits(nv))
        for x in range(len(ns)):
            for y in range(x + 1, len(ns)):
                a, c = ns[x], ns[y]
                if induced and adj[a] >> c & 1:
                    continue
                sub = rest & ~(1 << a) & ~(1 << c)
                val = 1 + best(sub)[0]
                if val > top[0]:
                    top = (val, (a, v, c), sub)
                    if val == ceiling:
                        return top
        # v as an end, centre b
        for b in ns:
            for c in _bits(adj[b] & rest & ~(1 << b)):
                if induced and adj[v] >> c & 1:
                    continue
                sub = rest & ~(1 << b) & ~(1 << c)
                val = 1 + best(sub)[0]
                if val > top[0]:
                    top = (val, (v, b, c), sub)
                    if val == ceiling:
                        return top
        # v unused
        if (bin(rest).count("1") // 3) > top[0]:
            val = best(rest)[0]
            if val > top[0]:
                top = (val, None, rest)
        return top

    mask = ix.full()
    paths = []
    while mask:
        val, path, nxt = best(mask)
        if val == 0:
            break
        if path is not None:
            paths.append(path)
        mask = nxt
    best.cache_clear()
    return len(paths), paths


def _solve_components(g: Graph, cap: int, induced: bool) -> Tuple[int, LambdaPacking]:
    _check_cap(g, cap)
    paths = []
    for comp in connected_components(g):
        if len(comp) < 3:
            continue
        ix = _Indexed(g.induced_subgraph(comp))
        _, ps = _max_paths(ix, induced)
        paths.extend(ix.label(p) for p in ps)
    return len(paths), LambdaPacking(paths)


def lambda_exact(g: Graph, cap: int = DEFAULT_CAP) -> Tuple[int, LambdaPacking]:
    """Maximum number of vertex-disjoint 3-vertex paths, with a witness."""
    return _solve_components(g, cap, induced=False)


def lambda_induced_exact(g: Graph, cap: int = DEFAULT_CAP) -> Tuple[int, LambdaPacking]:
    """Maximum packing of 3-vertex paths that are induced (no chord)."""
    return _solve_components(g, cap, induced=True)


def _factor_search(ix: _Indexed, mask: int) -> Optional[List[Tuple[int, int, int]]]:
    """Cover every vertex of ``mask`` by disjoint 3-vertex paths."""
    adj = ix.adj
    failed: Set[int] = set()

    def go(mask: int) -> Optional[List[Tuple[int, int, int]]]:
        if not mask:
            return []
        if mask in failed:
            return None
        # branch on the remaining vertex with the fewest options
        v = -1
        best_deg = 99
        for i in _bits(mask):
            d = bin(adj[i] & mask).count("1")
            if d == 0:
                failed.add(mask)
                return None
            if d < best_deg:
                best_deg, v = d, i
                if d == 1:
                    break
        rest = mask & ~(1 << v)
        ns = list(_bits(adj[v] & rest))
        for x in range(len(ns)):
            for y in range(x + 1, len(ns)):
                a, c = ns[x], ns[y]
                r = go(rest & ~(1 << a) & ~(1 << c))
                if r is not None:
                    r.append((a, v, c))
                    return r
        for b in ns:
            for c in _bits(adj[b] & rest & ~(1 << b)):
                r = go(rest & ~(1 << b) & ~(1 << c))
                if r is not None:
                    r.append((v, b, c))
                    return r
        if len(failed) < MEMO_MAXSIZE:
            failed.add(mask)
        return None

    return go(mask)


def has_lambda_factor(
    g: Graph, c: PackingConstraint = NO_CONSTRAINT, cap: int = DEFAULT_CAP
) -> Tuple[bool, Optional[LambdaPacking]]:
    """Does ``g`` minus forbidden items have a spanning Λ-packing meeting ``c``?"""
    _check_cap(g, cap)
    for v in c.forbidden_vertices:
        g.neighbors(v)
    h = g.delete_vertices(c.forbidden_vertices)
    if h.n() % 3:
        return False, None
    fe = [e for e in c.forbidden_edges if h.has_edge(*e)]
    h = h.delete_edges(fe)
    starts: List[Tuple[Path3, ...]]
    if c.required_path is not None:
        a, b, cc = c.required_path
        if not (h.has_edge(a, b) and h.has_edge(b, cc)):
            return False, None
        starts = [(c.required_path,)]
    elif c.required_edge is not None:
        u, v = c.required_edge
        if not h.has_edge(u, v):
            return False, None
        starts = [(p,) for p in paths_through_edge(h, u, v)]
    else:
        starts = [()]
    for pre in starts:
        used = {x for p in pre for x in p}
        rest = h.delete_vertices(used)
        found = _factor_of_components(rest)
        if found is not None:
            return True, LambdaPacking(list(pre) + found)
    return False, None


def _factor_of_components(h: Graph) -> Optional[List[Path3]]:
    out: List[Path3] = []
    for comp in connected_components(h):
        if len(comp) % 3:
            return None
    for comp in connected_components(h):
        ix = _Indexed(h.induced_subgraph(comp))
        r = _factor_search(ix, ix.full())
        if r is None:
            return None
        out.extend(ix.label(p) for p in r)
    return out


def p4_factor(g: Graph, cap: int = DEFAULT_CAP) -> Optional[List[Tuple[int, int, int, int]]]:
    """Partition of V(g) into 4-vertex paths (not necessarily induced), or None."""
    _check_cap(g, cap)
    if g.n() % 4:
        return None
    ix = _Indexed(g)
    adj = ix.adj
    failed: Set[int] = set()

    def go(mask: int):
        if not mask:
            return []
        if mask in failed:
            return None
        v = min(_bits(mask), key=lambda i: bin(adj[i] & mask).count("1"))
        rest = mask & ~(1 << v)
        # every P4 through v, with v at an end or in the middle
        cands = set()
        for a in _bits(adj[v] & rest):
            for b in _bits(adj[a] & rest & ~(1 << a)):
                for c in _bits(adj[b] & rest & ~(1 << a) & ~(1 << b)):
                    cands.add((v, a, b, c))
                for c in _bits(adj[v] & rest & ~(1 << a) & ~(1 << b)):
                    cands.add((c, v, a, b))
        for q in sorted(cands):
            r = go(mask & ~sum(1 << x for x in q))
            if r is not None:
                r.append(q)
                return r
        failed.add(mask)
        return None

    r = go(ix.full())
    return None if r is None else [ix.label(q) for q in r]


def max_induced_matching(g: Graph, cap: int = DEFAULT_CAP) -> Tuple[int, List[Edge]]:
    """Largest edge set whose members are pairwise at distance at least 2."""
    _check_cap(g, cap)
    ix = _Indexed(g)
    adj = ix.adj

    @lru_cache(maxsize=MEMO_MAXSIZE)
    def best(mask: int) -> Tuple[int, Optional[Tuple[int, int]], int]:
        m = mask
        for i in _bits(mask):
            if not adj[i] & mask:
                m &= ~(1 << i)
        if m != mask:
            return best(m)
        if not mask:
            return (0, None, 0)
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        top = (best(rest)[0], None, rest)
        for u in _bits(adj[v] & mask):
            sub = mask & ~(adj[v] | adj[u] | (1 << v) | (1 << u))
            val = 1 + best(sub)[0]
            if val > top[0]:
                top = (val, (v, u), sub)
        return top

    mask = ix.full()
    chosen = []
    while mask:
        val, e, nxt = best(mask)
        if val == 0:
            break
        if e is not None:
            chosen.append(edge(*ix.label(e)))
        mask = nxt
    best.cache_clear()
    return len(chosen), sorted(chosen)


def _domination(g: Graph, independent: bool, cap: int) -> Tuple[int, FrozenSet[int]]:
    _check_cap(g, cap)
    if g.n() == 0:
        return 0, frozenset()
    ix = _Indexed(g)
    n = len(ix.labels)
    closed = [ix.adj[i] | (1 << i) for i in range(n)]
    full = ix.full()
    maxcover = max(bin(c).count("1") for c in closed)

    # greedy upper bound (maximal independent when required)
    dom, chosen, banned = 0, 0, 0
    while dom != full:
        cands = [i for i in range(n) if not (banned >> i & 1)] if independent else range(n)
        i = max(cands, key=lambda j: (bin(closed[j] & ~dom).count("1"), -j))
        chosen |= 1 << i
        dom |= closed[i]
        if independent:
            banned |= closed[i]
    best = [bin(chosen).count("1"), chosen]

    def go(dom: int, chosen: int, count: int, excluded: int) -> None:
        if dom == full:
            if count < best[0]:
                best[0], best[1] = count, chosen
            return
        undominated = full & ~dom
        if count + -(-bin(undominated).count("1") // maxcover) >= best[0]:
            return
        # undominated vertex with fewest usable dominators
        options = None
        for u in _bits(undominated):
            opts = [w for w in _bits(closed[u]) if not (excluded >> w & 1)]
            if options is None or len(opts) < len(options):
                options = opts
                if len(opts) <= 1:
                    break
        if not options:
            return
        options.sort(key=lambda w: -bin(closed[w] & undominated).count("1"))
        ex = excluded
        for w in options:
            nex = ex | (1 << w)
            if independent:
                nex |= ix.adj[w]
            go(dom | closed[w], chosen | (1 << w), count + 1, nex)
            ex |= 1 << w

    go(0, 0, 0, 0)
    return best[0], frozenset(ix.labels[i] for i in _bits(best[1]))


def domination_exact(g: Graph, cap: int = DOMINATION_CAP) -> Tuple[int, FrozenSet[int]]:
    """Minimum dominating set by branch and bound."""
    return _domination(g, independent=False, cap=cap)


def independent_domination_exact(g: Graph, cap: int = DOMINATION_CAP) -> Tuple[int, FrozenSet[int]]:
    """Minimum independent dominating set by branch and bound."""
    return _domination(g, independent=True, cap=cap)


def is_dominating(g: Graph, S) -> bool:
    S = set(S)
    return all(v in S or g.neighbors(v) & S for v in g.vertices)


def lambda_e_exact(g: Graph, cap: int = 40) -> int:
    """Edge-disjoint 3-vertex path count by search over edge bitmasks."""
    es = g.edges()
    if len(es) > cap:
        raise OracleCapError(len(es), cap)
    idx = {e: i for i, e in enumerate(es)}
    pairs_at: List[List[int]] = [[] for _ in es]
    for v in g.vertices:
        inc = [idx[edge(v, w)] for w in g.neighbors(v)]
        for i in inc:
            for j in inc:
                if i != j:
                    pairs_at[i].append(j)

    @lru_cache(maxsize=MEMO_MAXSIZE)
    def best(mask: int) -> int:
        if not mask:
            return 0
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        top = best(rest)
        ceiling = bin(mask).count("1") // 2
        for j in pairs_at[i]:
            if rest >> j & 1:
                top = max(top, 1 + best(rest & ~(1 << j)))
                if top == ceiling:
                    break
        return top

    r = best((1 << len(es)) - 1)
    best.cache_clear()
    return r


def require_within_cap(g: Graph, cap: int) -> None:
    _check_cap(g, cap)


def assert_claimed_path(g: Graph, p: Sequence[int]) -> None:
    a, b, c = p
    if not (g.has_edge(a, b) and g.has_edge(b, c)):
        raise PreconditionError(f"{tuple(p)} is not a 3-vertex path")
