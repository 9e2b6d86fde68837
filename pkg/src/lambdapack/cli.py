"""Command-line interface: ``lambdapack <verb> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Iterable, List, Optional

from .decomposition import block_decomposition, is_cactus, is_chain, is_edge_chain
from .domination import check_gamma_bounds, check_ham_claw, find_hamiltonian_cycle
from .errors import ConstructionFailure, InternalAssertionError, LambdaPackError, PreconditionError
from .generators import FAMILIES, FamilyRecipe, build_family
from .graph import Graph, line_graph
from .graphio import from_edgelist, read_graphs, to_graph6
from .harness import (
    Campaign,
    check_ids,
    check_theorem,
    expand_units,
    run_campaign,
    write_jsonl,
)
from .linegraph import edge_three_factor, lambda_e, lambda_e_via_matching
from .oracle import (
    DEFAULT_CAP,
    DOMINATION_CAP,
    domination_exact,
    has_lambda_factor,
    lambda_exact,
    lambda_induced_exact,
    max_induced_matching,
)
from .packer import pack_2connected_clawfree, pack_chain, pack_clawfree, reduce
from .report import ALGORITHM_BUG, COUNTEREXAMPLE
from . import theorems as T

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE, EXIT_INTERNAL = 0, 1, 2, 3


def _ints(s: str) -> List[int]:
    return [int(t) for t in s.replace(",", " ").split()]


def _edges(s: str) -> List[List[int]]:
    return [_ints(part) for part in s.split(";") if part.strip()]


def _graphs(args) -> List[Graph]:
    src = args.input
    fh = sys.stdin if src in (None, "-") else open(src)
    try:
        if args.in_format == "edgelist":
            return [from_edgelist(fh.read())]
        return read_graphs(fh, "graph6")
    finally:
        if fh is not sys.stdin:
            fh.close()


def _emit(args, obj: Any) -> None:
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True))
        return
    if isinstance(obj, dict):
        print("  ".join(f"{k}={_short(v)}" for k, v in obj.items()))
    else:
        print(_short(obj))


def _short(v: Any) -> str:
    return v if isinstance(v, str) else json.dumps(v, sort_keys=True)


def _certificates(out: Any) -> Iterable[dict]:
    if isinstance(out, T.Certificate):
        yield out.to_json()
    elif isinstance(out, (list, tuple)) and out and all(isinstance(c, T.Certificate) for c in out):
        for c in out:
            yield c.to_json()
    else:
        yield {"result": out}


# -- verbs ----------------------------------------------------------------------

def cmd_generate(args) -> int:
    params = json.loads(args.params)
    os.makedirs(args.out, exist_ok=True)
    manifest = []
    for i in range(args.count):
        p = dict(params, seed=params.get("seed", args.seed) + i)
        g, extras = build_family(FamilyRecipe(args.family, p))
        name = f"{args.family}-{i:04d}.g6"
        with open(os.path.join(args.out, name), "w") as fh:
            fh.write(to_graph6(g) + "\n")
        manifest.append({"file": name, "family": args.family, "params": p, "n": g.n(), "m": g.m(), **extras})
    with open(os.path.join(args.out, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=1, sort_keys=True)
    _emit(args, {"written": len(manifest), "out": args.out})
    return EXIT_OK


def cmd_decompose(args) -> int:
    for g in _graphs(args):
        d = block_decomposition(g).to_json()
        d.update(chain=is_chain(g), cactus=is_cactus(g), edge_chain=is_edge_chain(g))
        _emit(args, d)
    return EXIT_OK


def cmd_oracle(args) -> int:
    for g in _graphs(args):
        if args.mode == "lambda":
            v, p = lambda_exact(g, args.cap)
            w = p.to_json()
        elif args.mode == "factor":
            v, p = has_lambda_factor(g, cap=args.cap)
            w = p.to_json() if p else None
        elif args.mode == "induced":
            v, p = lambda_induced_exact(g, args.cap)
            w = p.to_json()
        elif args.mode == "matching":
            v, es = max_induced_matching(g, args.cap)
            w = [list(e) for e in es]
        else:
            v, dom = domination_exact(g, max(args.cap, DOMINATION_CAP))
            w = sorted(dom)
        _emit(args, {"value": v, "witness": w})
    return EXIT_OK


def cmd_pack(args) -> int:
    for g in _graphs(args):
        if args.algorithm == "auto":
            p, cert = pack_clawfree(g)
            _emit(args, {"packing": p.to_json(), "size": len(p), "certificate": cert.to_json()})
        elif args.algorithm == "reduce":
            trace = reduce(g)
            _emit(args, trace.to_json())
        else:
            fn = pack_2connected_clawfree if args.algorithm == "2conn" else pack_chain
            p = fn(g)
            _emit(args, {"packing": p.to_json(), "size": len(p), "target": g.n() // 3})
    return EXIT_OK


def _theorem_call(name: str, g: Graph, args):
    """Run one theorem routine on the arguments given on the command line."""
    e = _ints(args.edge) if args.edge else None
    L = _ints(args.path) if args.path else None
    x = args.vertex
    E = _edges(args.edges) if args.edges else None
    table = {
        "avoid-e": lambda: T.factor_avoiding_edge(g, e),
        "plus-Pk": lambda: T.factor_plus_Pk(g),
        "minus-claw": lambda: T.factor_minus_claw(g),
        "minus-x": lambda: T.factor_minus_vertex(g, x),
        "minus-xb": lambda: T.factor_minus_edge_pair(g, x),
        "minus-xy": lambda: T.factor_minus_adjacent_pair(g, e),
        "contain-e": lambda: T.factor_containing_edge(g, e),
        "minus-L-pair": lambda: T.factor_minus_path_pair(g, x, args.center),
        "minus-L-deg3": lambda: T.factor_minus_path_deg3(g, L),
        "minus-L": lambda: T.factor_minus_path(g, L),
        "minus-x-e": lambda: T.factor_minus_vertex_and_edge(g, x, e),
        "delta-L": lambda: T.delta_factor_through_path(g, L, args.mode),
        "delta-3edge": lambda: T.delta_three_edge_test(g, E),
        "delta-2edge": lambda: T.delta_two_edge_factor(g, E),
    }
    return table[name]()


def cmd_theorem(args) -> int:
    name = args.name
    code = EXIT_OK
    specific = any(v is not None for v in (args.edge, args.path, args.vertex, args.edges))
    for g in _graphs(args):
        if name not in T.THEOREMS or not specific:
            rep = check_theorem(name, g, {"mode": args.mode} if args.mode != "auto" else None, args.cap)
            out = rep.to_json()
            if rep.status == "confirmed" and name in T.THEOREMS and args.certificates:
                out["certificates"] = [c for u in expand_units(name, g, {}, args.cap) for c in _certificates(u.construct())]
            _emit(args, out)
            code = max(code, _status_code(rep.status))
            continue
        try:
            res = _theorem_call(name, g, args)
        except ConstructionFailure as exc:
            # unadjudicated: only the harness path consults the oracle
            _emit(args, {"theorem": name, "status": ALGORITHM_BUG, "error": str(exc)})
            code = max(code, EXIT_INTERNAL)
            continue
        for c in _certificates(res):
            _emit(args, c)
    return code


def _status_code(status: str) -> int:
    if status == COUNTEREXAMPLE:
        return EXIT_COUNTEREXAMPLE
    if status == ALGORITHM_BUG:
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_domination(args) -> int:
    code = EXIT_OK
    for g in _graphs(args):
        if args.check == "bounds":
            rep = check_gamma_bounds(g, max(args.cap, DOMINATION_CAP))
        else:
            cyc = _ints(args.cycle) if args.cycle else find_hamiltonian_cycle(g)
            if cyc is None:
                raise PreconditionError("graph is not Hamiltonian")
            rep = check_ham_claw(g, cyc, args.cap)
        _emit(args, rep.to_json())
        code = max(code, _status_code(rep.status))
    return code


def cmd_linegraph(args) -> int:
    for g in _graphs(args):
        if args.op == "lg":
            L, idx = line_graph(g)
            _emit(args, {"graph6": to_graph6(L), "vertex_of_edge": [[list(e), i] for e, i in sorted(idx.items())]})
        elif args.op == "lambda_e":
            k, pk, notes = lambda_e(g)
            k2, _ = lambda_e_via_matching(g)
            _emit(args, {"value": k, "matching_route": k2, "parts": pk.to_json(), "notes": notes})
        else:
            parts = edge_three_factor(g)
            _emit(args, {"parts": parts.to_json()})
    return EXIT_OK


def cmd_campaign(args) -> int:
    ids = [t.strip() for t in args.theorems.split(",") if t.strip()]
    recipes = []
    if args.family:
        params = json.loads(args.params)
        recipes = [FamilyRecipe(args.family, dict(params, seed=params.get("seed", args.seed) + i))
                   for i in range(args.count)]
    g6 = [to_graph6(g) for g in _graphs(args)] if args.input else []
    if not recipes and not g6:
        raise PreconditionError("campaign needs --family or --input")
    camp = Campaign(ids, recipes, g6, args.cap, args.seed, args.jobs, args.timeout)
    reports, summary = run_campaign(camp)
    if args.out:
        with open(args.out, "w") as fh:
            write_jsonl(reports, fh)
    elif args.format == "json":
        write_jsonl(reports, sys.stdout)
    else:
        for r in reports:
            print(f"{r['theorem']:<16} {r['instance']:<24} {r['status'] if r['hypothesis_check']['pass'] else 'n/a'}")
    print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    if summary["counterexample-candidate"]:
        return EXIT_COUNTEREXAMPLE
    if summary["algorithm-bug-candidate"]:
        return EXIT_INTERNAL
    return EXIT_OK


# -- parser -----------------------------------------------------------------------

def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--cap", type=int, default=d(DEFAULT_CAP))
    p.add_argument("--jobs", type=int, default=d(1))
    p.add_argument("--format", choices=("json", "text"), default=d("json"))
    p.add_argument("--in", dest="in_format", choices=("graph6", "edgelist"), default=d("graph6"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lambdapack", description="Λ-packings of claw-free graphs.")
    _global_flags(ap, False)
    sub = ap.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_, takes_input=True):
        p = sub.add_parser(name, help=help_)
        _global_flags(p, True)
        if takes_input:
            p.add_argument("--input", help="graph file (default: stdin)")
        p.set_defaults(fn=fn)
        return p

    p = verb("generate", cmd_generate, "write generated instances and a manifest", takes_input=False)
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--params", default="{}", help="JSON object of family parameters")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", required=True)

    verb("decompose", cmd_decompose, "block tree and chain classification")

    p = verb("oracle", cmd_oracle, "exact exhaustive solvers")
    p.add_argument("--mode", choices=("lambda", "factor", "induced", "matching", "domination"), default="lambda")

    p = verb("pack", cmd_pack, "constructive claw-free packer")
    p.add_argument("--algorithm", choices=("auto", "2conn", "chain", "reduce"), default="auto")

    p = verb("theorem", cmd_theorem, "run or check a constructive theorem")
    p.add_argument("--name", required=True, help="theorem or check id")
    p.add_argument("--edge", help="edge 'u,v'")
    p.add_argument("--edges", help="edges 'u,v;u,v;...'")
    p.add_argument("--path", help="3-vertex path 'a,b,c'")
    p.add_argument("--vertex", type=int)
    p.add_argument("--center", type=int, help="centre y for minus-L-pair")
    p.add_argument("--mode", default="auto", choices=("auto", "triangles", "no-triangle", "with-triangle"))
    p.add_argument("--certificates", action="store_true", help="attach every certificate to the report")

    p = verb("domination", cmd_domination, "domination bounds from packings")
    p.add_argument("--check", choices=("bounds", "ham"), default="bounds")
    p.add_argument("--cycle", help="Hamiltonian cycle 'v0,v1,...' (searched for when omitted)")

    p = verb("linegraph", cmd_linegraph, "line-graph correspondences")
    p.add_argument("--op", choices=("lg", "lambda_e", "edge3factor"), default="lg")

    p = verb("campaign", cmd_campaign, "batch verification (JSON lines)")
    p.add_argument("--theorems", required=True, help="comma-separated ids: " + ", ".join(check_ids()))
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--params", default="{}")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--timeout", type=float, default=60.0)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.fn(args)
    except (InternalAssertionError, AssertionError) as exc:
        print(f"internal assertion: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ConstructionFailure as exc:
        print(f"construction failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (LambdaPackError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
