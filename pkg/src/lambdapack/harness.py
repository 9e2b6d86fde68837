"""Batch verification of the constructive results against the oracle.

Every check takes a graph plus manifest extras and returns a
``VerdictReport``.  A claim that the constructive code fails to realize is
handed to the oracle: if the oracle also finds nothing the instance is a
counterexample candidate, otherwise it is an algorithm-bug candidate.
"""

from __future__ import annotations

import json
import signal
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .connectivity import is_k_connected, is_two_connected
from .decomposition import block_decomposition
from .domination import check_gamma_bounds, check_gamma_vs_lambda, check_ham_claw, find_hamiltonian_cycle
from .errors import ConstructionFailure, LambdaPackError, OracleCapError, PreconditionError
from .generators import FamilyRecipe, build_family, familyS_violations, is_delta_graph
from .graph import Graph, clawfree, edge, is_connected, line_graph
from .graphio import from_graph6, to_graph6
from .linegraph import (
    edge_three_factor,
    induced_matching_to_lambda_packing,
    lambda_e,
    lambda_e_via_matching,
    lambda_packing_to_induced_matching,
)
from .oracle import DEFAULT_CAP, DOMINATION_CAP, domination_exact, has_lambda_factor, lambda_exact, p4_factor
from .packer import pack_2connected_clawfree, pack_chain, pack_clawfree
from .packing import PackingConstraint, all_paths, paths_centered_at
from .report import ALGORITHM_BUG, CONFIRMED, COUNTEREXAMPLE, SEARCHED, SKIPPED, VerdictReport
from . import theorems as T

DEFAULT_TIMEOUT = 60.0

Oracle = Callable[[], bool]


@dataclass
class Unit:
    """One literal instance of a quantified claim."""

    label: str
    construct: Callable[[], Any]
    oracle: Oracle


def _factor(h: Graph, cap: int, c: Optional[PackingConstraint] = None) -> bool:
    return has_lambda_factor(h, c=c, cap=cap)[0]


def _forbid_edges(*es) -> PackingConstraint:
    return PackingConstraint(forbidden_edges=frozenset(edge(*e) for e in es))


def _simple_paths(g: Graph, k: int) -> List[Tuple[int, ...]]:
    out = set()
    stack = [(v,) for v in g.vertices]
    while stack:
        p = stack.pop()
        if len(p) == k:
            out.add(min(p, p[::-1]))
            continue
        for w in g.neighbors(p[-1]):
            if w not in p:
                stack.append(p + (w,))
    return sorted(out)


def _subgraph_claws(g: Graph) -> List[Tuple[int, Tuple[int, ...]]]:
    return [(c, ls) for c in g.vertices for ls in combinations(sorted(g.neighbors(c)), 3)]


def _count_at_least(items: Iterable[bool], k: int) -> bool:
    n = 0
    for ok in items:
        n += ok
        if n >= k:
            return True
    return False


# -- quantifier expansion, one arm per constructive theorem -------------------

def expand_units(theorem: str, g: Graph, extras: Dict[str, Any], cap: int) -> List[Unit]:
    es = g.edges()
    V = g.vertices
    if theorem == "avoid-e":
        return [Unit(f"e={e}", lambda e=e: T.factor_avoiding_edge(g, e),
                     lambda e=e: _factor(g, cap, _forbid_edges(e))) for e in es]
    if theorem == "plus-Pk":
        k = g.n() % 3
        return [Unit("P_k and P_k+3", lambda: T.factor_plus_Pk(g),
                     lambda: all(any(_factor(g.delete_vertices(p), cap) for p in _simple_paths(g, j))
                                 for j in (k, k + 3)))]
    if theorem == "minus-claw":
        return [Unit("two claws", lambda: T.factor_minus_claw(g),
                     lambda: _count_at_least((_factor(g.delete_vertices((c, *ls)), cap)
                                              for c, ls in _subgraph_claws(g)), 2))]
    if theorem == "minus-x":
        return [Unit(f"x={x}", lambda x=x: T.factor_minus_vertex(g, x),
                     lambda x=x: _factor(g.delete_vertices([x]), cap)) for x in V]
    if theorem == "minus-xb":
        def orc(x):
            hs = (g.delete_vertices([x, b]) for b in sorted(g.neighbors(x)))
            return _count_at_least((is_connected(h) and _factor(h, cap) for h in hs), 2)
        return [Unit(f"x={x}", lambda x=x: T.factor_minus_edge_pair(g, x), lambda x=x: orc(x)) for x in V]
    if theorem == "minus-xy":
        return [Unit(f"xy={e}", lambda e=e: T.factor_minus_adjacent_pair(g, e),
                     lambda e=e: _factor(g.delete_vertices(e), cap)) for e in es]
    if theorem == "contain-e":
        return [Unit(f"e={e}", lambda e=e: T.factor_containing_edge(g, e),
                     lambda e=e: _factor(g, cap, PackingConstraint(required_edge=e))) for e in es]
    if theorem == "minus-L-pair":
        def orc2(x, y):
            hs = (g.delete_vertices(L) for L in paths_centered_at(g, y) if x in L)
            return _count_at_least((is_connected(h) and _factor(h, cap) for h in hs), 2)
        return [Unit(f"x={x},y={y}", lambda x=x, y=y: T.factor_minus_path_pair(g, x, y),
                     lambda x=x, y=y: orc2(x, y)) for u, v in es for x, y in ((u, v), (v, u))]
    if theorem in ("minus-L-deg3", "minus-L", "delta-L"):
        fn = {"minus-L-deg3": T.factor_minus_path_deg3, "minus-L": T.factor_minus_path,
              "delta-L": lambda h, L: T.delta_factor_through_path(h, L, extras.get("mode", "auto"))}[theorem]
        Ls = [L for L in all_paths(g) if theorem != "minus-L-deg3" or g.degree(L[1]) == 3]
        return [Unit(f"L={L}", lambda L=L: fn(g, L), lambda L=L: _factor(g.delete_vertices(L), cap)) for L in Ls]
    if theorem == "minus-x-e":
        return [Unit(f"x={x},e={e}", lambda x=x, e=e: T.factor_minus_vertex_and_edge(g, x, e),
                     lambda x=x, e=e: _factor(g.delete_vertices([x]), cap, _forbid_edges(e) if x not in e else None))
                for x in V for e in es]
    if theorem == "delta-3edge":
        triples = [tuple(map(tuple, t)) for t in extras["triples"]] if "triples" in extras else list(combinations(es, 3))

        def agree(E):
            got, cls = T.delta_three_edge_test(g, E)
            if got != _factor(g, cap, _forbid_edges(*E)):
                raise ConstructionFailure(f"characterization ({cls}) disagrees with the oracle", graph=g)
            return got
        return [Unit(f"E={E}", lambda E=E: agree(E), lambda: False) for E in triples]
    if theorem == "delta-2edge":
        return [Unit(f"E={E}", lambda E=E: T.delta_two_edge_factor(g, E),
                     lambda E=E: _factor(g, cap, _forbid_edges(*E))) for E in combinations(es, 2)]
    raise PreconditionError(f"unknown theorem {theorem!r}")


def _hypothesis(theorem: str, g: Graph) -> Optional[str]:
    """None when the instance meets the theorem's hypothesis, else the reason."""
    n = g.n()
    two = is_two_connected(g)
    cf = clawfree(g)
    three = two and is_k_connected(g, 3)
    r = n % 3
    need = {
        "avoid-e": (two and cf and r == 0, "2-connected claw-free, v ≡ 0"),
        "plus-Pk": (two and cf and r != 0, "2-connected claw-free, v ≢ 0"),
        "minus-claw": (two and cf and r == 1 and g.m() != n, "2-connected claw-free non-cycle, v ≡ 1"),
        "minus-x": (two and cf and r == 1, "2-connected claw-free, v ≡ 1"),
        "minus-xb": (two and cf and r == 2, "2-connected claw-free, v ≡ 2"),
        "minus-xy": (three and cf and r == 2, "3-connected claw-free, v ≡ 2"),
        "contain-e": (three and cf and r == 0, "3-connected claw-free, v ≡ 0"),
        "minus-L-pair": (three and cf and r == 0, "3-connected claw-free, v ≡ 0"),
        "minus-L-deg3": (three and cf and r == 0, "3-connected claw-free, v ≡ 0"),
        "minus-L": (cf and r == 0 and ((three and g.is_regular(3)) or is_k_connected(g, 4)),
                    "cubic 3-connected or 4-connected claw-free, v ≡ 0"),
        "minus-x-e": (three and cf and r == 1, "3-connected claw-free, v ≡ 1"),
        "delta-L": (two and is_delta_graph(g), "2-connected Δ-graph"),
        "delta-3edge": (two and is_delta_graph(g), "2-connected Δ-graph"),
        "delta-2edge": (two and is_delta_graph(g), "2-connected Δ-graph"),
    }[theorem]
    return None if need[0] else f"needs {need[1]}"


def _verify_units(theorem: str, g: Graph, extras: Dict[str, Any], cap: int) -> VerdictReport:
    inst = to_graph6(g)
    why = _hypothesis(theorem, g)
    if why:
        return VerdictReport(theorem, inst, False, why)
    t0 = time.perf_counter()
    units = expand_units(theorem, g, extras, cap)
    for u in units:
        try:
            u.construct()
        except ConstructionFailure as exc:
            return _adjudicate(theorem, g, u, str(exc), cap, t0)
    return VerdictReport(theorem, inst, True, "hypothesis holds", True, CONFIRMED,
                         {"units": len(units)}, {"total": time.perf_counter() - t0})


def _adjudicate(theorem: str, g: Graph, u: Unit, msg: str, cap: int, t0: float) -> VerdictReport:
    """Second opinion from the oracle on a unit the construction failed."""
    inst = to_graph6(g)
    w = {"unit": u.label, "construction": msg, "graph6": inst}
    try:
        holds = u.oracle()
    except OracleCapError:
        w["oracle"] = f"unavailable above cap {cap}"
        status = ALGORITHM_BUG
    else:
        w["oracle"] = "claim holds" if holds else "claim fails"
        status = ALGORITHM_BUG if holds else COUNTEREXAMPLE
    return VerdictReport(theorem, inst, True, "hypothesis holds", False, status, w,
                         {"total": time.perf_counter() - t0})


# -- value checks ----------------------------------------------------------------

def _report(theorem, g, ok, witness, t0, detail="hypothesis holds", oracle_says=None) -> VerdictReport:
    """CONFIRMED, or a failure label depending on whether the oracle agrees the claim fails."""
    if ok:
        status = CONFIRMED
    else:
        status = COUNTEREXAMPLE if oracle_says is False else ALGORITHM_BUG
    return VerdictReport(theorem, to_graph6(g), True, detail, ok, status, witness,
                         {"total": time.perf_counter() - t0})


def _oracle_lambda(g: Graph, cap: int) -> Optional[int]:
    return lambda_exact(g, cap)[0] if g.n() <= cap else None


def check_2conclfr(g: Graph, extras, cap: int) -> VerdictReport:
    if not (is_two_connected(g) and clawfree(g)):
        return VerdictReport("2conclfr", to_graph6(g), False, "needs 2-connected claw-free")
    t0 = time.perf_counter()
    n = g.n()
    p = pack_2connected_clawfree(g)
    left = g.delete_vertices(p.vertices)
    shape = left.n() == n % 3 and (left.n() < 2 or is_connected(left))
    lam = _oracle_lambda(g, cap)
    ok = len(p) == n // 3 and shape and lam in (None, n // 3)
    return _report("2conclfr", g, ok, {"packing": len(p), "target": n // 3, "oracle": lam,
                                       "leftover": sorted(left.vertices)}, t0,
                   oracle_says=None if lam is None else lam == n // 3)


def check_chain(g: Graph, extras, cap: int) -> VerdictReport:
    if not (is_connected(g) and clawfree(g) and block_decomposition(g).eb <= 2):
        return VerdictReport("chain", to_graph6(g), False, "needs connected claw-free with eb ≤ 2")
    t0 = time.perf_counter()
    p = pack_chain(g)
    lam = _oracle_lambda(g, cap)
    ok = len(p) == g.n() // 3 and lam in (None, g.n() // 3)
    return _report("chain", g, ok, {"packing": len(p), "target": g.n() // 3, "oracle": lam}, t0,
                   oracle_says=None if lam is None else lam == g.n() // 3)


def check_eb_bound(g: Graph, extras, cap: int) -> VerdictReport:
    if not (is_connected(g) and clawfree(g)):
        return VerdictReport("eb-bound", to_graph6(g), False, "needs connected claw-free")
    b = block_decomposition(g).eb
    if b < 2:
        return VerdictReport("eb-bound", to_graph6(g), False, "needs eb ≥ 2")
    t0 = time.perf_counter()
    p, _ = pack_clawfree(g)
    bound = (g.n() - b + 2) // 3
    lam = _oracle_lambda(g, cap)
    ok = len(p) >= bound and lam in (None, len(p))
    return _report("eb-bound", g, ok, {"packing": len(p), "bound": bound, "eb": b, "oracle": lam}, t0,
                   oracle_says=None if lam is None else lam >= bound)


def check_clawfree_max(g: Graph, extras, cap: int) -> VerdictReport:
    if not clawfree(g):
        return VerdictReport("clawfree-max", to_graph6(g), False, "needs claw-free")
    if g.n() > cap:
        return VerdictReport("clawfree-max", to_graph6(g), True, f"skipped: above cap {cap}", None, SKIPPED)
    t0 = time.perf_counter()
    p, cert = pack_clawfree(g)
    lam = lambda_exact(g, cap)[0]
    # a packer/oracle disagreement is always a packer bug: the oracle is exact
    return _report("clawfree-max", g, len(p) == lam, {"packing": len(p), "oracle": lam}, t0, oracle_says=True)


def check_familyS(g: Graph, extras, cap: int) -> VerdictReport:
    bad = familyS_violations(g)
    if bad:
        return VerdictReport("A", to_graph6(g), False, "not in family S: " + ", ".join(bad))
    if g.n() > cap:
        return VerdictReport("A", to_graph6(g), True, f"skipped: above cap {cap}", None, SKIPPED)
    t0 = time.perf_counter()
    has, f = has_lambda_factor(g, cap=cap)
    w = {"factor": f.to_json() if f else None}
    return VerdictReport("A", to_graph6(g), True, "family S member", not has,
                         COUNTEREXAMPLE if has else CONFIRMED, w, {"total": time.perf_counter() - t0})


def check_constructions(g: Graph, extras, cap: int) -> VerdictReport:
    """Oracle confirmation that the supplied edges/path lie on no Λ-factor."""
    inst = to_graph6(g)
    cons = []
    for key in ("a", "b", "e"):
        if key in extras:
            cons.append((key, PackingConstraint(required_edge=tuple(extras[key]))))
    if "T" in extras:
        t = list(extras["T"])
        cons.append(("T", PackingConstraint(forbidden_vertices=frozenset(t))))
    if not cons:
        return VerdictReport("constructions", inst, False, "needs extras a, b, e or T")
    t0 = time.perf_counter()
    found = {k: _factor(g, cap, c) for k, c in cons}
    ok = not any(found.values())
    return VerdictReport("constructions", inst, True, "construction with marked elements", ok,
                         CONFIRMED if ok else COUNTEREXAMPLE, {"factor_exists": found},
                         {"total": time.perf_counter() - t0})


def check_cubic_quarter(g: Graph, extras, cap: int) -> VerdictReport:
    if g.n() == 0 or not g.is_regular(3):
        return VerdictReport("cubic-quarter", to_graph6(g), False, "needs a cubic graph")
    if g.n() > cap:
        return VerdictReport("cubic-quarter", to_graph6(g), True, f"skipped: above cap {cap}", None, SKIPPED)
    t0 = time.perf_counter()
    lam = lambda_exact(g, cap)[0]
    bound = -(-g.n() // 4)
    return _report("cubic-quarter", g, lam >= bound, {"lambda": lam, "bound": bound}, t0, oracle_says=lam >= bound)


def check_lambda_e(g: Graph, extras, cap: int) -> VerdictReport:
    if not is_connected(g) or g.m() == 0:
        return VerdictReport("lambda-e", to_graph6(g), False, "needs a connected graph with an edge")
    t0 = time.perf_counter()
    k1, _, _ = lambda_e(g)
    k2, _ = lambda_e_via_matching(g)
    ok = k1 == k2 == g.m() // 2
    # maximum matching is exact, so a shortfall of the pairing is a bug
    return _report("lambda-e", g, ok, {"constructive": k1, "matching": k2, "target": g.m() // 2}, t0,
                   oracle_says=k2 == g.m() // 2)


def check_roundtrip(g: Graph, extras, cap: int) -> VerdictReport:
    if g.n() > cap:
        return VerdictReport("induced-roundtrip", to_graph6(g), True, f"skipped: above cap {cap}", None, SKIPPED)
    t0 = time.perf_counter()
    lam, p = lambda_exact(g, cap)
    L, M = lambda_packing_to_induced_matching(g, p)
    back = induced_matching_to_lambda_packing(g, M)
    ok = back.paths == p.paths and len(M) == lam
    return _report("induced-roundtrip", g, ok, {"lambda": lam, "matching": len(M)}, t0, "any graph")


def check_edge3(g: Graph, extras, cap: int) -> VerdictReport:
    inst = to_graph6(g)
    L, _ = line_graph(g)
    if g.m() % 3 or L.n() == 0 or not is_connected(L) or block_decomposition(L).eb > 2:
        return VerdictReport("edge3factor", inst, False, "needs e ≡ 0 and L(G) connected with eb ≤ 2")
    t0 = time.perf_counter()
    try:
        parts = edge_three_factor(g)
    except ConstructionFailure as exc:
        holds = _factor(L, cap) if L.n() <= cap else None
        return _report("edge3factor", g, False, {"construction": str(exc), "oracle": holds}, t0,
                       oracle_says=holds)
    return _report("edge3factor", g, True, {"parts": parts.to_json()}, t0)


def check_ham(g: Graph, extras, cap: int) -> VerdictReport:
    if g.n() == 0 or not g.is_regular(3) or g.n() % 3 != 1:
        return VerdictReport("ham-claw", to_graph6(g), False, "needs cubic with v ≡ 1")
    cyc = extras.get("cycle")
    if cyc is None:
        try:
            cyc = find_hamiltonian_cycle(g)
        except PreconditionError as exc:
            return VerdictReport("ham-claw", to_graph6(g), True, str(exc), None, SKIPPED)
    if cyc is None:
        return VerdictReport("ham-claw", to_graph6(g), False, "not Hamiltonian")
    return check_ham_claw(g, cyc, cap)


CHECKS: Dict[str, Callable[[Graph, Dict[str, Any], int], VerdictReport]] = {
    "2conclfr": check_2conclfr,
    "chain": check_chain,
    "eb-bound": check_eb_bound,
    "clawfree-max": check_clawfree_max,
    "A": check_familyS,
    "constructions": check_constructions,
    "cubic-quarter": check_cubic_quarter,
    "lambda-e": check_lambda_e,
    "induced-roundtrip": check_roundtrip,
    "edge3factor": check_edge3,
    "gamma": lambda g, extras, cap: check_gamma_bounds(g, max(cap, DOMINATION_CAP)),
    "gamma-lambda": lambda g, extras, cap: check_gamma_vs_lambda(g, cap),
    "ham-claw": check_ham,
}
for _t in T.THEOREMS:
    CHECKS[_t] = (lambda t: lambda g, extras, cap: _verify_units(t, g, extras, cap))(_t)

ALIASES = {
    "G-Y": "minus-claw",
    "clfree-2con-avoid-e": "avoid-e",
    "clfree-2con-x": "minus-x",
    "clfree-2con-xb": "minus-xb",
    "clfree-3con-xy": "minus-xy",
    "clfree-3con-e": "contain-e",
    "clfree-3con-L": "minus-L-pair",
    "clfree-3con-xe": "minus-x-e",
}


# -- open problems -----------------------------------------------------------------

def _search_pr3con(g: Graph, cap: int) -> Optional[bool]:
    if not (g.n() and g.is_regular(3) and is_k_connected(g, 3)):
        return None
    return lambda_exact(g, cap)[0] == g.n() // 3


def _search_gamma_v1(g: Graph, cap: int) -> Optional[bool]:
    if not (g.n() % 3 == 1 and g.is_regular(3) and is_k_connected(g, 3)):
        return None
    return domination_exact(g, max(cap, DOMINATION_CAP))[0] <= g.n() // 3


def _search_p4_factor(g: Graph, cap: int) -> Optional[bool]:
    if not (g.n() % 4 == 0 and g.n() and clawfree(g) and is_k_connected(g, 3)):
        return None
    return p4_factor(g, cap) is not None


OPEN_PROBLEMS: Dict[str, Callable[[Graph, int], Optional[bool]]] = {
    "pr3con": _search_pr3con,
    "gamma-v1mod3": _search_gamma_v1,
    "p4-factor": _search_p4_factor,
}


def search_open(problem: str, g: Graph, cap: int = DEFAULT_CAP) -> VerdictReport:
    """One instance of an open-problem search; never reports a confirmation."""
    fn = OPEN_PROBLEMS[problem]
    inst = to_graph6(g)
    t0 = time.perf_counter()
    try:
        verdict = fn(g, cap)
    except OracleCapError as exc:
        return VerdictReport(problem, inst, True, str(exc), None, SKIPPED)
    if verdict is None:
        return VerdictReport(problem, inst, False, "outside the problem's class")
    status = SEARCHED if verdict else COUNTEREXAMPLE
    return VerdictReport(problem, inst, True, "in class", verdict, status, {},
                         {"total": time.perf_counter() - t0})


# -- dispatch -------------------------------------------------------------------------

def check_ids() -> List[str]:
    return sorted(set(CHECKS) | set(ALIASES) | set(OPEN_PROBLEMS))


def check_theorem(theorem: str, g: Graph, extras: Optional[Dict[str, Any]] = None,
                  cap: int = DEFAULT_CAP) -> VerdictReport:
    key = ALIASES.get(theorem, theorem)
    if key in OPEN_PROBLEMS:
        return search_open(key, g, cap)
    if key not in CHECKS:
        raise PreconditionError(f"unknown theorem {theorem!r}; valid ids: {', '.join(check_ids())}")
    rep = CHECKS[key](g, dict(extras or {}), cap)
    rep.theorem = theorem
    return rep


# -- campaigns ---------------------------------------------------------------------------

@dataclass
class Campaign:
    theorems: Sequence[str]
    recipes: Sequence[FamilyRecipe] = ()
    graph6: Sequence[str] = ()
    cap: int = DEFAULT_CAP
    seed: int = 0
    jobs: int = 1
    timeout: float = DEFAULT_TIMEOUT

    def items(self) -> List[Tuple[str, str, Dict[str, Any], Dict[str, Any]]]:
        """(theorem, graph6, extras, manifest) in deterministic order."""
        insts = []
        for r in self.recipes:
            g, extras = build_family(r)
            insts.append((to_graph6(g), extras, {"family": r.family, "params": dict(r.params)}))
        for s in self.graph6:
            insts.append((s, {}, {"source": "graph6"}))
        return [(t, s, ex, dict(man, seed=self.seed)) for s, ex, man in insts for t in self.theorems]


class _Timeout(Exception):
    pass


def _alarm(signum, frame):
    raise _Timeout()


def _run_item(args) -> dict:
    theorem, g6, extras, manifest, cap, timeout = args
    use_alarm = timeout and hasattr(signal, "SIGALRM")
    if use_alarm:
        old = signal.signal(signal.SIGALRM, _alarm)
        signal.setitimer(signal.ITIMER_REAL, timeout)
    try:
        rep = check_theorem(theorem, from_graph6(g6), extras, cap)
    except _Timeout:
        rep = VerdictReport(theorem, g6, True, f"timeout after {timeout} s", None, SKIPPED)
    except OracleCapError as exc:
        rep = VerdictReport(theorem, g6, True, f"skipped: {exc}", None, SKIPPED)
    except PreconditionError as exc:
        rep = VerdictReport(theorem, g6, False, str(exc))
    except (LambdaPackError, ValueError, KeyError, IndexError) as exc:
        rep = VerdictReport(theorem, g6, True, "hypothesis holds", False, ALGORITHM_BUG,
                            {"error": f"{type(exc).__name__}: {exc}"})
    finally:
        if use_alarm:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, old)
    rep.manifest = manifest
    return rep.to_json()


def summarize(reports: Iterable[dict]) -> Dict[str, int]:
    out = {"confirmed": 0, "skipped": 0, "counterexample-candidate": 0,
           "algorithm-bug-candidate": 0, "searched": 0, "hypothesis-failed": 0}
    for r in reports:
        if not r["hypothesis_check"]["pass"]:
            out["hypothesis-failed"] += 1
        else:
            out[r["status"]] += 1
    return out


def run_campaign(c: Campaign) -> Tuple[List[dict], Dict[str, Any]]:
    """Run every (theorem, instance) item; results come back in input order."""
    work = [(t, s, ex, man, c.cap, c.timeout) for t, s, ex, man in c.items()]
    if c.jobs <= 1:
        reports = [_run_item(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=c.jobs) as pool:
            reports = list(pool.map(_run_item, work, chunksize=max(1, len(work) // (4 * c.jobs))))
    summary: Dict[str, Any] = summarize(reports)
    opened = [r for r in reports if r["theorem"] in OPEN_PROBLEMS and r["hypothesis_check"]["pass"]]
    if opened:
        bad = sum(r["status"] == COUNTEREXAMPLE for r in opened)
        summary["note"] = f"searched {len(opened)}, " + (f"{bad} falsifying candidates" if bad else "none falsifying")
    return reports, summary


def write_jsonl(reports: Iterable[dict], fh) -> None:
    for r in reports:
        fh.write(json.dumps(r, sort_keys=True) + "\n")
