"""Polynomial-style Λ-packing for claw-free graphs.

Layers, bottom up:

* ``pack_2connected_clawfree`` peels a maximum packing off the last ear of
  a longest-cycle ear assembly and recurses on what is left, which stays
  2-connected and claw-free; a Hamiltonian residue is split directly.
* ``pack_chain`` handles connected graphs with at most two end-blocks by
  splitting off an end-block at its cut vertex and combining the two
  sides according to the residue of the end-block size mod 3.
* ``reduce`` trims end-chains with at least three vertices down to a
  factor-bearing piece until a chain or a cactus remains.
* ``pack_clawfree`` runs the reduction and packs the residue; a cactus
  residue is solved exactly by a small branch-and-bound when it fits the
  kernel cap, and otherwise packed to the end-block lower bound.

Every combination step is checked against its floor(v/3) target, so a
wrong intermediate answer surfaces as ``ConstructionFailure`` instead of
propagating.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .connectivity import is_two_connected
from .decomposition import block_decomposition, is_chain
from .ears import DEFAULT_BUDGET, procedure_E
from .errors import ConstructionFailure, PreconditionError
from .graph import Graph, clawfree, connected_components, is_connected
from .packing import LambdaPacking, Path3, all_paths

KERNEL_CAP = 24


# -- 2-connected ------------------------------------------------------------

def split_cycle(cyc: List[int], offset: int = 0) -> List[Path3]:
    """Consecutive triples around a cycle starting at ``offset``."""
    n = len(cyc)
    rot = cyc[offset:] + cyc[:offset]
    return [tuple(rot[3 * i: 3 * i + 3]) for i in range(n // 3)]


def split_path(p: List[int], offset: int = 0) -> List[Path3]:
    q = (len(p) - offset) // 3
    return [tuple(p[offset + 3 * i: offset + 3 * i + 3]) for i in range(q)]


def _leftover_ok(g: Graph, p: LambdaPacking) -> bool:
    left = set(g.vertices) - p.vertices
    if len(left) != g.n() % 3:
        return False
    if len(left) == 2:
        a, b = sorted(left)
        return g.has_edge(a, b)
    return True


def _pack2(g: Graph, routes: List[str]) -> LambdaPacking:
    n = g.n()
    if n < 3:
        return LambdaPacking()
    asm = procedure_E(g, budget=DEFAULT_BUDGET)
    if asm.r == 0:
        routes.append("hamiltonian-split")
        return LambdaPacking(split_cycle(asm.base_cycle))
    ear = asm.ears[-1]
    for off in range(len(ear) - 3 * (len(ear) // 3) + 1):
        P = LambdaPacking(split_path(ear, off))
        h = g.delete_vertices(P.vertices)
        if h.n() < 3:
            if h.n() == 2 and not h.has_edge(*h.vertices):
                continue
            routes.append("last-ear")
            return P
        if is_two_connected(h) and clawfree(h):
            routes.append("last-ear")
            return P + _pack2(h, routes)
    return _pack2_fallback(g, routes)


def _pack2_fallback(g: Graph, routes: List[str]) -> LambdaPacking:
    n = g.n()
    want = n // 3
    x = g.vertices[0]
    if n % 3 == 1:
        routes.append("fallback:G-x")
        p = pack_any(g.delete_vertices([x]))
        if len(p) == want:
            return p
    elif n % 3 == 2:
        for y in sorted(g.neighbors(x)):
            p = pack_any(g.delete_vertices([x, y]))
            if len(p) == want:
                routes.append("fallback:G-xy")
                return p
    else:
        for L in all_paths(g):
            p = pack_any(g.delete_vertices(L))
            if len(p) == want - 1:
                routes.append("fallback:G-L")
                return p + LambdaPacking([L])
    raise ConstructionFailure("2-connected claw-free graph not packed to floor(v/3)", graph=g)


def pack_2connected_clawfree(g: Graph, routes: Optional[List[str]] = None) -> LambdaPacking:
    """floor(v/3) disjoint 3-vertex paths of a 2-connected claw-free graph.

    The uncovered remainder is empty, one vertex, or the two ends of an
    edge, according to v mod 3.
    """
    if not is_two_connected(g):
        raise PreconditionError("graph is not 2-connected")
    if not clawfree(g):
        raise PreconditionError("graph is not claw-free")
    routes = [] if routes is None else routes
    p = _pack2(g, routes)
    p.validate(g)
    if len(p) != g.n() // 3 or not _leftover_ok(g, p):
        raise ConstructionFailure("2-connected packing missed its target", graph=g)
    return p


# -- chains -----------------------------------------------------------------

def _chain(g: Graph) -> LambdaPacking:
    n = g.n()
    want = n // 3
    if n < 3:
        return LambdaPacking()
    if is_two_connected(g):
        return _pack2(g, [])
    dec = block_decomposition(g)
    ends = sorted(
        (dec.blocks[i] for i in dec.end_blocks),
        key=lambda b: (b.kind != "two-connected", min(b.vertices)),
    )
    A = ends[0]
    (x,) = A.boundary
    inner = A.vertices - {x}
    B = g.delete_vertices(inner)
    a = len(A.vertices)
    if A.kind == "two-connected":
        Ag = g.induced_subgraph(A.vertices)
        if a % 3 == 0:
            p = _pack2(Ag, []) + pack_any(B.delete_vertices([x]))
        elif a % 3 == 1:
            p = pack_any(Ag.delete_vertices([x])) + pack_any(B)
        else:
            p = None
            for y in sorted(Ag.neighbors(x)):
                left = pack_any(Ag.delete_vertices([x, y]))
                if len(left) != (a - 2) // 3:
                    continue
                right = pack_any(B.add_edges([(x, y)]))
                if len(left) + len(right) == want:
                    p = left + right
                    break
            if p is None:
                raise ConstructionFailure("no edge xy at the cut vertex splits the end-block", graph=g)
    else:
        (y,) = inner
        if n % 3:
            p = pack_any(g.delete_vertices([y]))
        else:
            p = None
            for w in sorted(g.neighbors(x) - {y}):
                rest = pack_any(g.delete_vertices([y, x, w]))
                if len(rest) == want - 1:
                    p = rest + LambdaPacking([(y, x, w)])
                    break
            if p is None:
                raise ConstructionFailure("pendant edge cannot start a factor", graph=g)
    if len(p) != want:
        raise ConstructionFailure(f"chain packing has {len(p)} paths, expected {want}", graph=g)
    return p


def pack_chain(g: Graph) -> LambdaPacking:
    """floor(v/3) paths in a connected claw-free graph with eb <= 2."""
    if not is_connected(g):
        raise PreconditionError("graph not connected")
    if not clawfree(g):
        raise PreconditionError("graph is not claw-free")
    if block_decomposition(g).eb > 2:
        raise PreconditionError("not a chain")
    p = _chain(g)
    p.validate(g)
    return p


# -- end-chain trimming and reduction ---------------------------------------

@dataclass
class Trim:
    vertices: frozenset
    factor: LambdaPacking
    chain_vertices: frozenset
    boundary: int
    route: str


def trim_end_chain(C: Graph, b: int) -> Trim:
    """Largest factor-bearing piece of an end-chain, per v(C) mod 3."""
    c = C.n()
    if c < 3:
        raise PreconditionError("end-chain needs at least 3 vertices")
    if b not in C:
        raise PreconditionError("boundary vertex not in the end-chain")
    if c % 3 == 0:
        D, route = C, "whole"
    elif c % 3 == 1:
        D, route = C.delete_vertices([b]), "minus-boundary"
    else:
        D, route = None, ""
        neigh = sorted(C.neighbors(b))
        # first the pairs whose removal leaves a chain, then everything else
        first = [y for y in neigh if _is_chain_safe(C.delete_vertices([b, y]))]
        for y in first + [y for y in neigh if y not in first]:
            h = C.delete_vertices([b, y])
            p = pack_any(h)
            if len(p) == h.n() // 3:
                D = h
                route = "minus-edge:chain" if y in first else "minus-edge:search"
                factor = p
                break
        if D is None:
            raise ConstructionFailure("chain2mod3 violated: no edge at the boundary vertex works", graph=C)
        return Trim(frozenset(D.vertices), factor, frozenset(C.vertices), b, route)
    factor = pack_any(D)
    if len(factor) * 3 != D.n():
        raise ConstructionFailure("trimmed end-chain has no factor", graph=D)
    return Trim(frozenset(D.vertices), factor, frozenset(C.vertices), b, route)


def _is_chain_safe(h: Graph) -> bool:
    return h.n() > 0 and is_chain(h)


@dataclass
class ReductionTrace:
    trimmed: List[Trim]
    residual: Graph
    residual_kind: str

    @property
    def trimmed_paths(self) -> LambdaPacking:
        out = LambdaPacking()
        for t in self.trimmed:
            out = out + t.factor
        return out

    def to_json(self) -> dict:
        return {
            "trimmed": [
                {
                    "vertices": sorted(t.vertices),
                    "end_chain": sorted(t.chain_vertices),
                    "boundary": t.boundary,
                    "route": t.route,
                    "factor": t.factor.to_json(),
                }
                for t in self.trimmed
            ],
            "residual_vertices": sorted(self.residual.vertices),
            "residual_kind": self.residual_kind,
        }


def reduce(g: Graph) -> ReductionTrace:
    """Trim end-chains with three or more vertices until none is left.

    Works per component: removing a whole end-chain together with its
    boundary vertex is allowed to split the rest.
    """
    if not is_connected(g):
        raise PreconditionError("graph not connected")
    if not clawfree(g):
        raise PreconditionError("graph is not claw-free")
    trims: List[Trim] = []
    kinds: List[str] = []
    work = [g]
    residual_vertices = set()
    while work:
        h = work.pop()
        if h.n() < 3 or is_chain(h):
            residual_vertices |= set(h.vertices)
            kinds.append("chain")
            continue
        dec = block_decomposition(h)
        long_chains = [c for c in dec.end_chains if len(c) >= 3]
        if not long_chains:
            residual_vertices |= set(h.vertices)
            kinds.append("cactus")
            continue
        C = min(long_chains, key=lambda c: min(c.vertices))
        t = trim_end_chain(h.induced_subgraph(C.vertices), C.boundary)
        trims.append(t)
        rest = h.delete_vertices(t.vertices)
        for comp in sorted(connected_components(rest), key=min, reverse=True):
            work.append(rest.induced_subgraph(comp))
    residual = g.induced_subgraph(residual_vertices)
    kind = "cactus" if "cactus" in kinds else "chain"
    return ReductionTrace(trims, residual, kind)


# -- cactus kernel -----------------------------------------------------------

def _kernel_exact(h: Graph) -> List[Path3]:
    """Branch-and-bound maximum packing; no memo, min-degree branching."""
    adj = {v: set(h.neighbors(v)) for v in h.vertices}
    ceiling = h.n() // 3
    best: List[List[Path3]] = [[]]

    def go(rem: set, acc: List[Path3]) -> bool:
        live = {v for v in rem if adj[v] & rem}
        if len(acc) + len(live) // 3 <= len(best[0]):
            return False
        if len(acc) > len(best[0]):
            best[0] = list(acc)
            if len(acc) == ceiling:
                return True
        if len(live) < 3:
            return False
        v = min(live, key=lambda u: (len(adj[u] & live), u))
        nv = sorted(adj[v] & live)
        opts: List[Path3] = []
        for i, a in enumerate(nv):
            for c in nv[i + 1:]:
                opts.append((a, v, c))
        for bb in nv:
            for c in sorted((adj[bb] & live) - {v}):
                opts.append((v, bb, c))
        for pth in opts:
            acc.append(pth)
            if go(live - set(pth), acc):
                return True
            acc.pop()
        return go(live - {v}, acc)

    go(set(h.vertices), [])
    return best[0]


def _leaf_of_match_end_chain(h: Graph) -> Optional[int]:
    dec = block_decomposition(h)
    for c in sorted(dec.end_chains, key=lambda c: min(c.vertices)):
        if len(c) == 2:
            (leaf,) = c.vertices - {c.boundary}
            return leaf
    return None


# -- top level ---------------------------------------------------------------

@dataclass
class PackCertificate:
    size: int
    upper_bound: int
    lower_bound: int
    eb: int
    exact: bool
    residual_kind: str
    trimmed: int
    notes: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return dict(self.__dict__)


_MEMO: Dict[Graph, Tuple[LambdaPacking, bool, str]] = {}
_MEMO_LIMIT = 20000


def _pack_connected(g: Graph) -> Tuple[LambdaPacking, bool, str]:
    """(packing, exact?, residual kind) for a connected claw-free graph."""
    hit = _MEMO.get(g)
    if hit is not None:
        return hit
    if g.n() < 3:
        out = (LambdaPacking(), True, "chain")
    elif is_chain(g):
        out = (_chain(g), True, "chain")
    else:
        trace = reduce(g)
        p = trace.trimmed_paths
        exact = True
        for comp in connected_components(trace.residual):
            k = trace.residual.induced_subgraph(comp)
            if k.n() < 3:
                continue
            if is_chain(k):
                p = p + _chain(k)
            elif k.n() <= KERNEL_CAP:
                p = p + LambdaPacking(_kernel_exact(k))
            else:
                leaf = _leaf_of_match_end_chain(k)
                if leaf is None:
                    raise ConstructionFailure("cactus without a pendant match", graph=k)
                sub, _, _ = _pack_connected(k.delete_vertices([leaf]))
                p = p + sub
                exact = False
        if len(p) == g.n() // 3:
            exact = True
        out = (p, exact, trace.residual_kind)
    if len(_MEMO) > _MEMO_LIMIT:
        _MEMO.clear()
    _MEMO[g] = out
    return out


def pack_any(g: Graph) -> LambdaPacking:
    """Pack every component of a claw-free graph independently."""
    if g.n() < 3:
        return LambdaPacking()
    if is_connected(g):
        return _pack_connected(g)[0]
    out = LambdaPacking()
    for comp in connected_components(g):
        if len(comp) >= 3:
            out = out + _pack_connected(g.induced_subgraph(comp))[0]
    return out


def pack_clawfree(g: Graph) -> Tuple[LambdaPacking, PackCertificate]:
    """Maximum (or certified lower-bound) packing of a connected claw-free graph."""
    if not is_connected(g):
        raise PreconditionError("graph not connected")
    if not clawfree(g):
        raise PreconditionError("graph is not claw-free")
    p, exact, kind = _pack_connected(g)
    p.validate(g)
    n = g.n()
    ebg = block_decomposition(g).eb
    lower = (n - ebg + 2) // 3 if ebg >= 2 else n // 3
    if len(p) < lower:
        raise ConstructionFailure(f"packing {len(p)} below the end-block bound {lower}", graph=g)
    trims = 0 if kind == "chain" and is_chain(g) else len(reduce(g).trimmed)
    cert = PackCertificate(len(p), n // 3, lower, ebg, exact, kind, trims)
    if not exact:
        cert.notes.append("cactus kernel above cap: lower bound only")
    return p, cert


def clear_cache() -> None:
    _MEMO.clear()
