"""Constructive factor theorems for claw-free graphs and Δ-graphs.

Each routine returns a ``Certificate`` whose packing has been validated
against the host graph and the routine's constraint.  Invalid input
raises ``PreconditionError``; valid input for which no factor is found
raises ``ConstructionFailure`` (a counterexample candidate).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence, Tuple

from .connectivity import is_k_connected, is_two_connected
from .decomposition import block_decomposition
from .ears import procedure_E
from .errors import ConstructionFailure, PreconditionError
from .generators import is_delta_graph, triangles
from .graph import Edge, Graph, clawfree, connected_components, edge, is_connected
from .packer import _pack2, pack_2connected_clawfree, pack_any, pack_chain, split_cycle, split_path
from .packing import LambdaPacking, PackingConstraint, Path3, normalize_path

THEOREMS = (
    "avoid-e", "plus-Pk", "minus-claw", "minus-x", "minus-xb", "minus-xy",
    "contain-e", "minus-L-pair", "minus-L-deg3", "minus-L", "minus-x-e",
    "delta-L", "delta-3edge", "delta-2edge",
)


@dataclass
class Certificate:
    theorem: str
    packing: LambdaPacking
    constraint: PackingConstraint
    witness: Dict[str, object] = field(default_factory=dict)
    checks: Dict[str, bool] = field(default_factory=dict)
    route: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "packing": self.packing.to_json(),
            "constraint": self.constraint.to_json(),
            "witness": self.witness,
            "checks_passed": self.checks,
            "route": self.route,
        }


def _certify(theorem: str, g: Graph, p: LambdaPacking, c: PackingConstraint, route=(), **witness) -> Certificate:
    ok = c.satisfied_by(p, g)
    if not ok:
        raise ConstructionFailure(f"{theorem}: packing violates its constraint", graph=g, constraint=c)
    return Certificate(theorem, p, c, dict(witness), {"valid": True, "constraint": True}, list(route))


def _require_2con_clawfree(g: Graph, mod: Optional[int] = None, k: int = 2) -> None:
    if k == 2 and not is_two_connected(g):
        raise PreconditionError("graph is not 2-connected")
    if k > 2 and not is_k_connected(g, k):
        raise PreconditionError(f"graph is not {k}-connected")
    if not clawfree(g):
        raise PreconditionError("graph is not claw-free")
    if mod is not None and g.n() % 3 != mod:
        raise PreconditionError(f"v(G) mod 3 is {g.n() % 3}, need {mod}")


def _is_factor(h: Graph, p: LambdaPacking) -> bool:
    return 3 * len(p) == h.n()


def _factor_of(h: Graph) -> Optional[LambdaPacking]:
    """Λ-factor of a claw-free graph, or None."""
    if h.n() % 3:
        return None
    p = pack_any(h)
    return p if _is_factor(h, p) else None


# -- avoiding an edge --------------------------------------------------------

def _cycle_avoiding(cyc: List[int], e: Edge) -> List[Path3]:
    for off in range(3):
        paths = split_cycle(cyc, off)
        used = {edge(a, b) for a, b, c in paths} | {edge(b, c) for a, b, c in paths}
        if e not in used:
            return paths
    raise ConstructionFailure("no rotation of the cycle avoids the edge")


def _avoid(g: Graph, e: Edge, route: List[str]) -> LambdaPacking:
    if g.n() == 0:
        return LambdaPacking()
    if not g.has_edge(*e):
        return _pack2(g, route)
    asm = procedure_E(g, anchor=e)
    if asm.r == 0:
        route.append("cycle")
        return LambdaPacking(_cycle_avoiding(asm.base_cycle, e))
    ear = asm.ears[-1]
    for off in range(len(ear) % 3 + 1):
        P = LambdaPacking(split_path(ear, off))
        h = g.delete_vertices(P.vertices)
        if h.n() == 0:
            route.append("last-ear")
            return P
        if is_two_connected(h) and clawfree(h):
            route.append("last-ear")
            return P + _avoid(h, e, route)
    raise ConstructionFailure("no maximum packing of the last ear leaves a 2-connected claw-free graph", graph=g)


def factor_avoiding_edge(g: Graph, e: Sequence[int]) -> Certificate:
    """Λ-factor of G - e for 2-connected claw-free G with v ≡ 0 mod 3."""
    _require_2con_clawfree(g, 0)
    e = edge(*e)
    if not g.has_edge(*e):
        raise PreconditionError(f"{e} is not an edge")
    route: List[str] = []
    p = _avoid(g, e, route)
    return _certify("avoid-e", g, p, PackingConstraint(forbidden_edges=[e]), route, e=list(e))


# -- leftover paths ----------------------------------------------------------

def _hamiltonian_path(g: Graph, vs: Sequence[int]) -> Optional[List[int]]:
    for perm in permutations(sorted(vs)):
        if perm[0] > perm[-1]:
            continue
        if all(g.has_edge(perm[i], perm[i + 1]) for i in range(len(perm) - 1)):
            return list(perm)
    return None


def _paths_of_length(g: Graph, k: int):
    """Vertex sequences of all k-vertex paths, each once."""
    def ext(path):
        if len(path) == k:
            if path[0] < path[-1] or k == 1:
                yield list(path)
            return
        for w in sorted(g.neighbors(path[-1])):
            if w not in path:
                yield from ext(path + [w])

    for v in g.vertices:
        yield from ext([v])


def factor_plus_Pk(g: Graph) -> Tuple[Certificate, Certificate]:
    """{Λ, P_k}- and {Λ, P_{k+3}}-factors where k = v mod 3 ∈ {1, 2}."""
    k = g.n() % 3
    if k == 0:
        raise PreconditionError("v(G) ≡ 0 mod 3")
    _require_2con_clawfree(g)
    p = pack_2connected_clawfree(g)
    left = sorted(set(g.vertices) - p.vertices)
    Pk = _hamiltonian_path(g, left)
    if Pk is None:
        raise ConstructionFailure("leftover is not a path", graph=g)
    small = _certify("plus-Pk", g, p, PackingConstraint(forbidden_vertices=left), ["2connected"], path=Pk)

    long_path = None
    rest = None
    for q in p.paths:
        hp = _hamiltonian_path(g, list(q) + left)
        if hp is not None:
            long_path = hp
            rest = LambdaPacking(x for x in p.paths if x != q)
            route = ["merge"]
            break
    if long_path is None:
        for path in _paths_of_length(g, k + 3):
            f = _factor_of(g.delete_vertices(path))
            if f is not None:
                long_path, rest, route = path, f, ["search"]
                break
    if long_path is None:
        raise ConstructionFailure(f"no P{k + 3} leaves a Λ-factor", graph=g)
    big = _certify("plus-Pk", g, rest, PackingConstraint(forbidden_vertices=long_path), route, path=long_path)
    return small, big


# -- deleting a claw, a vertex, a pair ---------------------------------------

def _claws(g: Graph):
    for c in g.vertices:
        for leaves in combinations(sorted(g.neighbors(c)), 3):
            yield (c,) + leaves


def factor_minus_claw(g: Graph, want: int = 2) -> List[Certificate]:
    """At least two claw subgraphs Y with G - Y Λ-factorable."""
    _require_2con_clawfree(g, 1)
    if g.m() == g.n():
        raise PreconditionError("graph is a cycle")
    out = []
    for Y in _claws(g):
        f = _factor_of(g.delete_vertices(Y))
        if f is not None:
            out.append(_certify("minus-claw", g, f, PackingConstraint(forbidden_vertices=Y), ["search"],
                                center=Y[0], leaves=list(Y[1:])))
            if len(out) == want:
                return out
    raise ConstructionFailure(f"found {len(out)} claws Y with G - Y factorable, need {want}", graph=g)


def factor_minus_vertex(g: Graph, x: int) -> Certificate:
    _require_2con_clawfree(g, 1)
    h = g.delete_vertices([x])
    if block_decomposition(h).eb > 2:
        raise ConstructionFailure("G - x has three end-blocks", graph=g)
    p = pack_chain(h)
    return _certify("minus-x", g, p, PackingConstraint(forbidden_vertices=[x]), ["chain"], x=x)


def factor_minus_edge_pair(g: Graph, x: int, want: int = 2) -> List[Certificate]:
    """Edges xb with G - {x, b} connected and Λ-factorable (at least two)."""
    _require_2con_clawfree(g, 2)
    out = []
    for b in sorted(g.neighbors(x)):
        h = g.delete_vertices([x, b])
        if not is_connected(h):
            continue
        f = _factor_of(h)
        if f is not None:
            out.append(_certify("minus-xb", g, f, PackingConstraint(forbidden_vertices=[x, b]), ["search"], x=x, b=b))
            if len(out) == want:
                return out
    raise ConstructionFailure(f"found {len(out)} edges xb, need {want}", graph=g)


def factor_minus_adjacent_pair(g: Graph, xy: Sequence[int]) -> Certificate:
    _require_2con_clawfree(g, 2, k=3)
    x, y = edge(*xy)
    if not g.has_edge(x, y):
        raise PreconditionError(f"{(x, y)} is not an edge")
    p = pack_chain(g.delete_vertices([x, y]))
    return _certify("minus-xy", g, p, PackingConstraint(forbidden_vertices=[x, y]), ["chain"], edge=[x, y])


# -- containing an edge / deleting a path ------------------------------------

def _path_certs(theorem: str, g: Graph, cands: Sequence[Path3], want: int, need_connected: bool) -> List[Certificate]:
    out = []
    for L in cands:
        h = g.delete_vertices(L)
        if need_connected and h.n() and not is_connected(h):
            continue
        f = _factor_of(h)
        if f is None:
            continue
        c = PackingConstraint(required_path=L)
        out.append(_certify(theorem, g, f + LambdaPacking([L]), c, ["search"], path=list(L)))
        if len(out) == want:
            break
    return out


def factor_containing_edge(g: Graph, e: Sequence[int]) -> Certificate:
    """Λ-factor containing edge e (3-connected claw-free, v ≡ 0)."""
    _require_2con_clawfree(g, 0, k=3)
    x, y = edge(*e)
    if not g.has_edge(x, y):
        raise PreconditionError(f"{(x, y)} is not an edge")
    cands = [normalize_path((x, y, w)) for w in sorted(g.neighbors(y) - {x})]
    cands += [normalize_path((y, x, w)) for w in sorted(g.neighbors(x) - {y})]
    got = _path_certs("contain-e", g, cands, 1, need_connected=False)
    if not got:
        raise ConstructionFailure("no Λ-factor contains the edge", graph=g)
    c = got[0]
    if not c.packing.uses_edge(x, y):
        raise ConstructionFailure("factor misses the edge", graph=g)
    return Certificate("contain-e", c.packing, PackingConstraint(required_edge=(x, y)), c.witness, c.checks, c.route)


def factor_minus_path_pair(g: Graph, x: int, y: int) -> List[Certificate]:
    """Two paths L centred at y through xy with G - L connected and factorable."""
    _require_2con_clawfree(g, 0, k=3)
    if not g.has_edge(x, y):
        raise PreconditionError(f"{(x, y)} is not an edge")
    cands = [normalize_path((x, y, w)) for w in sorted(g.neighbors(y) - {x})]
    got = _path_certs("minus-L-pair", g, cands, 2, need_connected=True)
    if len(got) < 2:
        raise ConstructionFailure(f"found {len(got)} paths centred at {y}, need 2", graph=g)
    return got


def _minus_given_path(theorem: str, g: Graph, L: Sequence[int]) -> Certificate:
    a, b, c = L
    if not (g.has_edge(a, b) and g.has_edge(b, c)) or len({a, b, c}) != 3:
        raise PreconditionError(f"{tuple(L)} is not a 3-vertex path")
    got = _path_certs(theorem, g, [normalize_path(L)], 1, need_connected=True)
    if not got:
        raise ConstructionFailure("G - L is disconnected or has no Λ-factor", graph=g)
    return got[0]


def factor_minus_path_deg3(g: Graph, L: Sequence[int]) -> Certificate:
    """G - L for a path whose centre has degree 3 (3-connected claw-free, v ≡ 0)."""
    _require_2con_clawfree(g, 0, k=3)
    if g.degree(L[1]) != 3:
        raise PreconditionError("centre of L does not have degree 3")
    return _minus_given_path("minus-L-deg3", g, L)


def factor_minus_path(g: Graph, L: Sequence[int]) -> Certificate:
    """G - L for every path L (cubic 3-connected or 4-connected claw-free, v ≡ 0)."""
    cubic3 = g.is_regular(3) and is_k_connected(g, 3)
    if not (cubic3 or is_k_connected(g, 4)):
        raise PreconditionError("graph is neither cubic 3-connected nor 4-connected")
    _require_2con_clawfree(g, 0)
    return _minus_given_path("minus-L", g, L)


def factor_minus_vertex_and_edge(g: Graph, x: int, e: Sequence[int]) -> Certificate:
    """Λ-factor of G - x - e (3-connected claw-free, v ≡ 1)."""
    _require_2con_clawfree(g, 1, k=3)
    e = edge(*e)
    if not g.has_edge(*e):
        raise PreconditionError(f"{e} is not an edge")
    h = g.delete_vertices([x])
    route: List[str] = []
    if x in e:
        p = _pack2(h, route)
    else:
        p = _avoid(h, e, route)
    c = PackingConstraint(forbidden_vertices=[x], forbidden_edges=[e] if x not in e else [])
    return _certify("minus-x-e", g, p, c, route, x=x, e=list(e))


# -- Δ-graphs ----------------------------------------------------------------

class _Delta:
    """Triangle bookkeeping: tri[v] is v's triangle, ext[v] its other neighbour."""

    def __init__(self, g: Graph):
        if not is_delta_graph(g):
            raise PreconditionError("not a Δ-graph")
        self.g = g
        self.tris = triangles(g)
        self.tri = {v: i for i, t in enumerate(self.tris) for v in t}
        self.ext = {}
        for v in g.vertices:
            (w,) = [u for u in g.neighbors(v) if self.tri[u] != self.tri[v]]
            self.ext[v] = w

    def in_triangle(self, e: Edge) -> bool:
        return self.tri[e[0]] == self.tri[e[1]]

    def triangle_factor(self, skip=()) -> List[Path3]:
        skip = set(skip)
        return [t for i, t in enumerate(self.tris) if i not in skip]

    def perfect_matching_with(self, v: int) -> Optional[Dict[int, int]]:
        """Matching of triangle nodes via external edges, containing ext edge of v.

        Returns the chosen matched vertex per triangle.
        """
        chosen = {self.tri[v]: v, self.tri[self.ext[v]]: self.ext[v]}
        nodes = set(range(len(self.tris)))

        def go() -> bool:
            free = nodes - set(chosen)
            if not free:
                return True
            opts = {}
            for t in free:
                opts[t] = [a for a in self.tris[t] if self.tri[self.ext[a]] in free and self.tri[self.ext[a]] != t]
            t = min(free, key=lambda i: (len(opts[i]), i))
            for a in opts[t]:
                b = self.ext[a]
                chosen[t], chosen[self.tri[b]] = a, b
                if go():
                    return True
                del chosen[t], chosen[self.tri[b]]
            return False

        return dict(chosen) if go() else None

    def two_factor_cycles(self, middle: Dict[int, int]) -> List[List[int]]:
        """Hamiltonian cycles of the blown-up 2-factor components."""
        seen = set()
        out = []
        for t in range(len(self.tris)):
            if t in seen:
                continue
            cyc: List[int] = []
            w = middle[t]
            u = [a for a in self.tris[t] if a != w][0]
            cur_t, entry = t, u
            while True:
                seen.add(cur_t)
                m = middle[cur_t]
                (out_v,) = [a for a in self.tris[cur_t] if a not in (entry, m)]
                cyc += [entry, m, out_v]
                nxt = self.ext[out_v]
                cur_t, entry = self.tri[nxt], nxt
                if cur_t == t:
                    break
            out.append(cyc)
        return out


def _orient_path(g: Graph, L: Sequence[int], D: _Delta) -> Tuple[int, int, int]:
    """Return (x, z, z1): xz in a triangle, zz1 external."""
    a, b, c = L
    if D.tri[a] == D.tri[b] and D.tri[c] != D.tri[b]:
        return a, b, c
    if D.tri[c] == D.tri[b] and D.tri[a] != D.tri[b]:
        return c, b, a
    raise PreconditionError("path does not leave its centre's triangle")


def _split_at(cyc: List[int], x: int, z: int) -> List[Path3]:
    i = cyc.index(x)
    if cyc[(i + 1) % len(cyc)] != z:
        cyc = cyc[::-1]
        i = cyc.index(x)
    return split_cycle(cyc, i)


def _check_delta_2con(g: Graph) -> _Delta:
    D = _Delta(g)
    if not is_two_connected(g):
        raise PreconditionError("Δ-graph is not 2-connected")
    return D


def delta_factor_through_path(g: Graph, L: Sequence[int], mode: str = "auto") -> Certificate:
    """Λ-factor containing the 3-vertex path L of a 2-connected Δ-graph.

    ``mode``: ``triangles`` (L a triangle; every component a triangle),
    ``no-triangle`` (no component induces a triangle), ``with-triangle``
    (some component induces a triangle), or ``auto``.
    """
    D = _check_delta_2con(g)
    a, b, c = L
    if len({a, b, c}) != 3 or not (g.has_edge(a, b) and g.has_edge(b, c)):
        raise PreconditionError(f"{tuple(L)} is not a 3-vertex path")
    is_tri = g.has_edge(a, c)
    if mode == "auto":
        mode = "triangles" if is_tri else "no-triangle"
    if (mode == "triangles") != is_tri:
        raise PreconditionError(f"mode {mode!r} does not match the shape of L")
    Lp = normalize_path(L)
    if mode == "triangles":
        paths = [Lp] + D.triangle_factor(skip=[D.tri[b]])
        route = ["triangles"]
    else:
        x, z, z1 = _orient_path(g, L, D)
        if mode == "no-triangle":
            middle = D.perfect_matching_with(x)
            if middle is None:
                raise ConstructionFailure("no 2-factor of the pre-image through the path", graph=g)
            paths = []
            for cyc in D.two_factor_cycles(middle):
                if x in cyc:
                    paths += _split_at(cyc, x, z)
                else:
                    paths += split_cycle(cyc, 1)
            route = ["two-factor"]
        elif mode == "with-triangle":
            paths = _cycle_with_triangles(D, x, z, z1)
            route = ["short-cycle"]
        else:
            raise PreconditionError(f"unknown mode {mode!r}")
    p = LambdaPacking(paths)
    cert = _certify("delta-L", g, p, PackingConstraint(required_path=Lp), route, path=list(Lp), mode=mode)
    tri_parts = [q for q in p.paths if g.has_edge(q[0], q[2])]
    cert.checks["shape"] = {
        "triangles": len(tri_parts) == len(p),
        "no-triangle": not tri_parts,
        "with-triangle": bool(tri_parts),
    }[mode]
    if not cert.checks["shape"]:
        raise ConstructionFailure(f"factor does not have the {mode} shape", graph=g)
    return cert


def _cycle_with_triangles(D: _Delta, x: int, z: int, z1: int) -> List[Path3]:
    T = D.tri[x]
    (s,) = [v for v in D.tris[T] if v not in (x, z)]
    s1 = D.ext[s]
    start, goal = D.tri[z1], D.tri[s1]
    # shortest simple walk of triangle nodes from z1's triangle to s1's,
    # entering each node at one vertex and leaving at another
    limit = len(D.tris) - 2
    found: List[List[Tuple[int, int, int]]] = []

    def dfs(t: int, ent: int, used: set, acc: list, depth: int) -> bool:
        if t == goal and ent != s1:
            found.append(acc + [(t, ent, s1)])
            return True
        if depth == 0:
            return False
        for v in D.tris[t]:
            if v == ent:
                continue
            u = D.ext[v]
            tu = D.tri[u]
            if tu == T or tu in used:
                continue
            used.add(tu)
            if dfs(tu, u, used, acc + [(t, ent, v)], depth - 1):
                return True
            used.discard(tu)
        return False

    for depth in range(limit):
        if dfs(start, z1, {start}, [], depth):
            break
    if not found:
        raise ConstructionFailure("every cycle through the path spans the pre-image", graph=D.g)
    walk = found[0]
    chain = [t for t, _, _ in walk]
    cyc = [x, z]
    for t, ent, ex in walk:
        (mid,) = [v for v in D.tris[t] if v not in (ent, ex)]
        cyc += [ent, mid, ex]
    cyc.append(s)
    return split_cycle(cyc, 0) + D.triangle_factor(skip=[T] + chain)


def delta_three_edge_test(g: Graph, E: Sequence[Sequence[int]]) -> Tuple[bool, str]:
    """(G - E has a Λ-factor, class) for three edges E of a 2-connected Δ-graph.

    class is one of ``claw``, ``triangle``, ``e3``, ``e4`` (no factor) or
    ``none`` (factor exists).
    """
    D = _check_delta_2con(g)
    es = sorted({edge(*e) for e in E})
    if len(es) != 3:
        raise PreconditionError("need exactly three distinct edges")
    for e in es:
        if not g.has_edge(*e):
            raise PreconditionError(f"{e} is not an edge")
    sub = Graph({v for e in es for v in e}, es)
    common = set(es[0]) & set(es[1]) & set(es[2])
    if common:
        return False, "claw"
    if sub.n() == 3:
        return False, "triangle"
    comps = connected_components(sub)
    if len(comps) != 2:
        return True, "none"
    two = [e for e in es if set(e) <= comps[0]] if len(comps[0]) == 3 else [e for e in es if set(e) <= comps[1]]
    (one,) = [e for e in es if e not in two]
    if not all(D.in_triangle(e) for e in two):
        return True, "none"
    if D.tri[two[0][0]] != D.tri[two[1][0]]:
        return True, "none"
    (apex,) = set(two[0]) & set(two[1])
    t = edge(apex, D.ext[apex])
    if not D.in_triangle(one):
        rest = g.delete_edges(es)
        if not is_connected(rest):
            return False, "e3"
        return True, "none"
    Dt = D.tris[D.tri[one[0]]]
    (d1,) = [v for v in Dt if v not in one]
    d = edge(d1, D.ext[d1])
    rest = g.delete_edges([d, t] if d != t else [d])
    comp_of = {}
    for i, comp in enumerate(connected_components(rest)):
        for v in comp:
            comp_of[v] = i
    if comp_of[one[0]] != comp_of[apex]:
        return False, "e4"
    return True, "none"


def delta_two_edge_factor(g: Graph, E: Sequence[Sequence[int]]) -> Certificate:
    """Λ-factor of G - E for two edges E of a 2-connected Δ-graph."""
    D = _check_delta_2con(g)
    es = sorted({edge(*e) for e in E})
    if len(es) != 2:
        raise PreconditionError("need exactly two distinct edges")
    for e in es:
        if not g.has_edge(*e):
            raise PreconditionError(f"{e} is not an edge")
    c = PackingConstraint(forbidden_edges=es)
    tri_edges = [e for e in es if D.in_triangle(e)]
    same = len(tri_edges) == 2 and D.tri[tri_edges[0][0]] == D.tri[tri_edges[1][0]]
    if not same:
        # every triangle loses at most one edge and still carries a path
        paths = []
        for t in D.tris:
            gone = [e for e in tri_edges if set(e) <= set(t)]
            if gone:
                (mid,) = [v for v in t if v not in gone[0]]
                a, b = gone[0]
                paths.append((a, mid, b))
            else:
                paths.append(t)
        return _certify("delta-2edge", g, LambdaPacking(paths), c, ["triangles"], edges=[list(e) for e in es])
    (apex,) = set(es[0]) & set(es[1])
    T = D.tris[D.tri[apex]]
    u1, u2 = [v for v in T if v != apex]
    for V in ((u1, u2, D.ext[u2]), (D.ext[u1], u1, u2)):
        cert = delta_factor_through_path(g, V)
        if c.satisfied_by(cert.packing, g):
            return _certify("delta-2edge", g, cert.packing, c, ["through-path"] + cert.route,
                            edges=[list(e) for e in es], path=list(normalize_path(V)))
    raise ConstructionFailure("no factor of G - E", graph=g, constraint=c)
