"""Deliberately naive reference solvers, independent of lambdapack.oracle."""

from itertools import combinations


def p3s(adj):
    out = []
    for b in adj:
        for a, c in combinations(sorted(adj[b]), 2):
            out.append((a, b, c))
    return out


def max_p3_packing(adj, induced=False):
    paths = p3s(adj)
    if induced:
        paths = [p for p in paths if p[2] not in adj[p[0]]]
    best = 0

    def rec(i, used, k):
        nonlocal best
        best = max(best, k)
        if k + (len(adj) - len(used)) // 3 <= best:
            return
        for j in range(i, len(paths)):
            p = paths[j]
            if used.isdisjoint(p):
                rec(j + 1, used | set(p), k + 1)

    rec(0, frozenset(), 0)
    return best


def domination_number(adj):
    vs = sorted(adj)
    for k in range(len(vs) + 1):
        for S in combinations(vs, k):
            cov = set(S)
            for v in S:
                cov |= adj[v]
            if len(cov) == len(vs):
                return k
    return len(vs)


def adjacency(g):
    return {v: set(g.neighbors(v)) for v in g.vertices}
