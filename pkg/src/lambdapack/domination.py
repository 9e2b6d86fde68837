"""Domination bounds obtained from Λ-packings.

A Λ-packing is a star packing (each path is a star centred at its middle
vertex); extending it greedily to a spanning star factor gives a
dominating set, namely the star centres.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .connectivity import is_two_connected
from .ears import longest_cycle
from .errors import InvalidPacking, PreconditionError
from .graph import Graph, clawfree
from .graphio import to_graph6
from .oracle import (
    DEFAULT_CAP,
    DOMINATION_CAP,
    domination_exact,
    has_lambda_factor,
    independent_domination_exact,
    is_dominating,
    lambda_exact,
)
from .packer import pack_2connected_clawfree
from .packing import LambdaPacking
from .report import CONFIRMED, COUNTEREXAMPLE, SKIPPED, VerdictReport


@dataclass(frozen=True)
class StarFactor:
    stars: Tuple[Tuple[int, FrozenSet[int]], ...]

    @property
    def centers(self) -> FrozenSet[int]:
        return frozenset(c for c, _ in self.stars)

    def cmp(self) -> int:
        return len(self.stars)

    def validate(self, host: Graph) -> None:
        seen = set()
        for c, leaves in self.stars:
            for v in (c, *leaves):
                if v in seen:
                    raise InvalidPacking(f"vertex {v} in two stars")
                seen.add(v)
            for v in leaves:
                if not host.has_edge(c, v):
                    raise InvalidPacking(f"leaf {v} not adjacent to centre {c}")
        if seen != set(host.vertices):
            raise InvalidPacking("stars do not span the host")

    def to_json(self) -> list:
        return [{"center": c, "leaves": sorted(ls)} for c, ls in self.stars]


def packing_to_star_factor(g: Graph, p: LambdaPacking) -> StarFactor:
    """Extend ``p`` to a star factor; uncovered vertices join an adjacent centre or start a star."""
    p.validate(g)
    leaves: Dict[int, set] = {b: {a, c} for a, b, c in p.paths}
    covered = set(p.vertices)
    for v in g.vertices:
        if v in covered:
            continue
        hosts = sorted(c for c in g.neighbors(v) if c in leaves)
        if hosts:
            leaves[hosts[0]].add(v)
        else:
            leaves[v] = set()
        covered.add(v)
    sf = StarFactor(tuple(sorted((c, frozenset(ls)) for c, ls in leaves.items())))
    sf.validate(g)
    if not is_dominating(g, sf.centers):
        raise InvalidPacking("star centres do not dominate")
    return sf


def claw_star_factor(g: Graph, center: int, claw_leaves: Sequence[int], rest: LambdaPacking) -> StarFactor:
    """Star factor from a claw plus a Λ-factor of the remainder."""
    stars = [(b, frozenset((a, c))) for a, b, c in rest.paths]
    stars.append((center, frozenset(claw_leaves)))
    out = StarFactor(tuple(sorted(stars)))
    out.validate(g)
    return out


def _ceil3(n: int) -> int:
    return -(-n // 3)


def check_gamma_bounds(g: Graph, cap: int = DOMINATION_CAP) -> VerdictReport:
    """γ ≤ ⌈v/3⌉, γ = γ_i, and ≤ ⌊v/3⌋ for non-cycles with v ≡ 1 (2-connected claw-free)."""
    inst = to_graph6(g)
    if not (is_two_connected(g) and clawfree(g)):
        return VerdictReport("gamma", inst, False, "not 2-connected claw-free")
    if g.n() > cap:
        return VerdictReport("gamma", inst, True, f"skipped: {g.n()} vertices above cap {cap}", None, SKIPPED)
    t0 = time.perf_counter()
    gamma, dom = domination_exact(g, cap)
    gamma_i, idom = independent_domination_exact(g, cap)
    n = g.n()
    special = n % 3 == 1 and g.m() != g.n()
    bound = n // 3 if special else _ceil3(n)
    sf = packing_to_star_factor(g, pack_2connected_clawfree(g))
    ok = gamma <= bound and gamma == gamma_i and sf.cmp() <= _ceil3(n)
    witness = {
        "gamma": gamma,
        "gamma_i": gamma_i,
        "bound": bound,
        "margin": bound - gamma,
        "dominating_set": sorted(dom),
        "star_factor_size": sf.cmp(),
    }
    status = CONFIRMED if ok else COUNTEREXAMPLE
    return VerdictReport("gamma", inst, True, "2-connected claw-free", ok, status, witness,
                         {"total": time.perf_counter() - t0})


def check_gamma_vs_lambda(g: Graph, cap: int = DEFAULT_CAP) -> VerdictReport:
    """γ ≤ v - 2λ, both exactly and through the star factor of a maximum packing."""
    inst = to_graph6(g)
    if g.n() > cap:
        return VerdictReport("gamma-lambda", inst, True, f"skipped: above cap {cap}", None, SKIPPED)
    lam, p = lambda_exact(g, cap)
    gamma, _ = domination_exact(g, max(cap, DOMINATION_CAP))
    sf = packing_to_star_factor(g, p)
    ok = gamma <= sf.cmp() <= g.n() - 2 * lam
    return VerdictReport("gamma-lambda", inst, True, "any graph", ok, CONFIRMED if ok else COUNTEREXAMPLE,
                         {"gamma": gamma, "lambda": lam, "star_factor_size": sf.cmp()})


def find_hamiltonian_cycle(g: Graph) -> Optional[List[int]]:
    cyc, exact = longest_cycle(g)
    if cyc is not None and len(cyc) == g.n():
        return cyc
    if not exact:
        raise PreconditionError("Hamiltonicity undecided within the search budget")
    return None


def _is_hamiltonian_cycle(g: Graph, cyc: Sequence[int]) -> bool:
    if sorted(cyc) != sorted(g.vertices):
        return False
    return all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def check_ham_claw(g: Graph, cycle: Sequence[int], cap: int = DEFAULT_CAP) -> VerdictReport:
    """Some claw Y of a cubic Hamiltonian graph with v ≡ 1 leaves a Λ-factor."""
    if not g.is_regular(3):
        raise PreconditionError("graph is not cubic")
    if g.n() % 3 != 1:
        raise PreconditionError("v(G) is not ≡ 1 mod 3")
    if not _is_hamiltonian_cycle(g, cycle):
        raise PreconditionError("supplied cycle is not Hamiltonian")
    inst = to_graph6(g)
    if g.n() > cap:
        return VerdictReport("ham-claw", inst, True, f"skipped: above cap {cap}", None, SKIPPED)
    for c in g.vertices:
        for leaves in combinations(sorted(g.neighbors(c)), 3):
            rest = g.delete_vertices((c, *leaves))
            ok, f = has_lambda_factor(rest, cap=cap)
            if ok:
                sf = claw_star_factor(g, c, leaves, f)
                return VerdictReport("ham-claw", inst, True, "cubic Hamiltonian, v ≡ 1", True, CONFIRMED,
                                     {"center": c, "leaves": list(leaves), "factor": f.to_json(),
                                      "star_factor_size": sf.cmp(), "floor_v_3": g.n() // 3})
    return VerdictReport("ham-claw", inst, True, "cubic Hamiltonian, v ≡ 1", False, COUNTEREXAMPLE)


def reed_ratio_replay() -> Fraction:
    """λ/v implied by γ = (1/3 + 1/60)·v together with γ ≤ v - 2λ."""
    gamma_ratio = Fraction(1, 3) + Fraction(1, 60)
    return (1 - gamma_ratio) / 2
