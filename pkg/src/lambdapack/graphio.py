"""graph6 and plain edge-list serialization.

graph6 encoding/decoding is delegated to networkx; vertices are written
in sorted label order, so sparse labels are compacted to ``0..n-1``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, List, TextIO

import networkx as nx

from .errors import GraphError
from .graph import Graph


def to_graph6(g: Graph) -> str:
    """graph6 string (no ``>>graph6<<`` header, no newline)."""
    h, _ = g.relabeled()
    return nx.to_graph6_bytes(h.to_networkx(), header=False).decode("ascii").strip()


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    try:
        h = nx.from_graph6_bytes(s.encode("ascii"))
    except (ValueError, nx.NetworkXError) as exc:
        raise GraphError(f"bad graph6 string {s!r}: {exc}") from None
    return Graph(range(h.number_of_nodes()), h.edges())


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            yield from_graph6(line)


def to_edgelist(g: Graph) -> str:
    """``"n m"`` then one ``"u v"`` line per edge, on labels ``0..n-1``."""
    h, _ = g.relabeled()
    es = h.edges()
    out = [f"{h.n()} {len(es)}"]
    out.extend(f"{u} {v}" for u, v in es)
    return "\n".join(out) + "\n"


def from_edgelist(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise GraphError("edge list needs a header line 'n m'")
    try:
        nums = [int(t) for t in tokens]
    except ValueError:
        raise GraphError("edge list contains a non-integer token") from None
    n, m = nums[0], nums[1]
    body = nums[2:]
    if len(body) != 2 * m:
        raise GraphError(f"edge list header says {m} edges, found {len(body) / 2:g}")
    edges = list(zip(body[0::2], body[1::2]))
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} out of range for n={n}")
    g = Graph(range(n), edges)
    if g.m() != m:
        raise GraphError("edge list contains parallel edges")
    return g


def read_graphs(stream: TextIO, fmt: str = "graph6") -> List[Graph]:
    """Read every graph from ``stream``; edge lists hold exactly one graph."""
    if fmt == "graph6":
        return list(read_graph6_lines(stream))
    if fmt == "edgelist":
        return [from_edgelist(stream.read())]
    raise GraphError(f"unknown input format {fmt!r}")
