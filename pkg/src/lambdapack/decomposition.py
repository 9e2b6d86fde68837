"""Blocks, end-blocks, end-chains, chains, cacti and edge-chains.

A block is a maximal connected subgraph without a cut vertex of its own,
so it is either 2-connected or a single edge (a *match*).  The boundary
vertices of a block are its vertices that also lie in another block,
i.e. the cut vertices of the host it contains.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from .connectivity import bridges, is_connected
from .errors import GraphError, InternalAssertionError
from .graph import Graph, connected_components


@dataclass(frozen=True)
class Block:
    vertices: FrozenSet[int]
    boundary: FrozenSet[int]

    @property
    def kind(self) -> str:
        if len(self.vertices) == 1:
            return "point"
        return "match" if len(self.vertices) == 2 else "two-connected"

    @property
    def is_end_block(self) -> bool:
        return len(self.boundary) <= 1

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class EndChain:
    """A pendant chain of blocks and the single vertex attaching it."""

    vertices: FrozenSet[int]
    boundary: int
    blocks: Tuple[Block, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass
class ChainDecomposition:
    blocks: List[Block]
    cut_vertices: FrozenSet[int]
    # cut vertex -> indices of the blocks containing it
    block_tree: Dict[int, List[int]]
    end_blocks: List[int]
    end_chains: List[EndChain] = field(default_factory=list)

    @property
    def eb(self) -> int:
        return len(self.end_blocks)

    def to_json(self) -> dict:
        return {
            "blocks": [
                {"vertices": sorted(b.vertices), "boundary": sorted(b.boundary), "kind": b.kind}
                for b in self.blocks
            ],
            "cut_vertices": sorted(self.cut_vertices),
            "block_tree": {str(c): ids for c, ids in sorted(self.block_tree.items())},
            "end_blocks": self.end_blocks,
            "eb": self.eb,
            "end_chains": [
                {"vertices": sorted(c.vertices), "boundary": c.boundary} for c in self.end_chains
            ],
        }


def _biconnected_vertex_sets(g: Graph) -> List[FrozenSet[int]]:
    """Tarjan's edge-stack algorithm, iterative; assumes g connected."""
    disc: Dict[int, int] = {}
    low: Dict[int, int] = {}
    comps: List[FrozenSet[int]] = []
    estack: List[Tuple[int, int]] = []
    root = g.vertices[0]
    disc[root] = low[root] = 0
    t = 1
    stack = [(root, -1, iter(sorted(g.neighbors(root))))]
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == parent:
                continue
            if w in disc:
                if disc[w] < disc[u]:
                    estack.append((u, w))
                    low[u] = min(low[u], disc[w])
            else:
                disc[w] = low[w] = t
                t += 1
                estack.append((u, w))
                stack.append((w, u, iter(sorted(g.neighbors(w)))))
                advanced = True
                break
        if advanced:
            continue
        stack.pop()
        if stack:
            p = stack[-1][0]
            low[p] = min(low[p], low[u])
            if low[u] >= disc[p]:
                comp = set()
                while True:
                    a, b = estack.pop()
                    comp.add(a)
                    comp.add(b)
                    if (a, b) == (p, u):
                        break
                comps.append(frozenset(comp))
    return comps


def block_decomposition(g: Graph) -> ChainDecomposition:
    """Blocks of a connected graph with their boundary vertices.

    A single vertex is reported as one degenerate block; it is its own
    end-block, so ``eb(K1) = 1`` like any other graph with one block.
    """
    if g.n() == 0:
        raise GraphError("graph not connected (empty)")
    if not is_connected(g):
        raise GraphError("graph not connected")
    if g.n() == 1:
        blocks = [Block(frozenset(g.vertices), frozenset())]
    else:
        sets = sorted(_biconnected_vertex_sets(g), key=lambda s: (min(s), len(s), sorted(s)))
        count: Dict[int, int] = {}
        for s in sets:
            for v in s:
                count[v] = count.get(v, 0) + 1
        blocks = [Block(s, frozenset(v for v in s if count[v] > 1)) for s in sets]
    cut = frozenset(v for b in blocks for v in b.boundary)
    tree: Dict[int, List[int]] = {c: [] for c in sorted(cut)}
    for i, b in enumerate(blocks):
        for c in b.boundary:
            tree[c].append(i)
    ends = [i for i, b in enumerate(blocks) if b.is_end_block]
    dec = ChainDecomposition(blocks, cut, tree, ends)
    if len(ends) >= 3:
        dec.end_chains = _end_chains(dec)
    return dec


def _end_chains(dec: ChainDecomposition) -> List[EndChain]:
    # Walk inward from each end-block through cut vertices lying in exactly
    # two blocks and blocks with at most two boundary vertices; stop at a
    # branching cut vertex or at a block with three or more boundary vertices.
    chains = []
    for start in dec.end_blocks:
        members = [start]
        cur = start
        (b,) = dec.blocks[start].boundary
        while True:
            around = dec.block_tree[b]
            if len(around) != 2:
                break
            nxt = around[0] if around[1] == cur else around[1]
            blk = dec.blocks[nxt]
            if len(blk.boundary) != 2:
                break
            members.append(nxt)
            cur = nxt
            (b,) = blk.boundary - {b}
        verts = frozenset().union(*(dec.blocks[i].vertices for i in members))
        chains.append(EndChain(verts, b, tuple(dec.blocks[i] for i in members)))
    for i, a in enumerate(chains):
        for c in chains[i + 1:]:
            shared = a.vertices & c.vertices
            if shared - {a.boundary}:
                raise InternalAssertionError("end-chains overlap beyond a boundary vertex")
    return chains


def end_chains(g: Graph) -> List[EndChain]:
    """End-chains of connected ``g``; empty iff ``eb(g) <= 2``."""
    return block_decomposition(g).end_chains


def eb(g: Graph) -> int:
    return block_decomposition(g).eb


def is_chain(g: Graph) -> bool:
    return g.n() > 0 and is_connected(g) and block_decomposition(g).eb <= 2


def is_cactus(g: Graph) -> bool:
    if g.n() == 0 or not is_connected(g):
        return False
    dec = block_decomposition(g)
    return dec.eb >= 3 and all(len(c) == 2 for c in dec.end_chains)


def is_edge_two_connected(g: Graph) -> bool:
    return g.n() >= 2 and is_connected(g) and not bridges(g)


def is_edge_chain(g: Graph) -> bool:
    """Leaf-stripped core is a path of bridgeless pieces linked by bridges.

    Each piece must have at least two vertices; a bare vertex is not
    counted as edge 2-connected.
    """
    if not is_connected(g):
        return False
    core = g.delete_vertices(g.leaves())
    if core.n() == 0 or not is_connected(core):
        return False
    br = bridges(core)
    pieces = connected_components(core.delete_edges(br))
    if any(len(p) < 2 for p in pieces):
        return False
    where = {v: i for i, p in enumerate(pieces) for v in p}
    deg = [0] * len(pieces)
    for u, v in br:
        deg[where[u]] += 1
        deg[where[v]] += 1
    # the piece tree is connected; a path iff no piece meets 3+ bridges
    return all(d <= 2 for d in deg)


def boundary_vertices(g: Graph, S) -> FrozenSet[int]:
    S = frozenset(S)
    return frozenset(v for v in S if g.neighbors(v) - S)


def block_of_vertex_sets(g: Graph) -> List[FrozenSet[int]]:
    return [b.vertices for b in block_decomposition(g).blocks]


def end_block_with_cut(g: Graph, prefer_two_connected: bool = True) -> Optional[Tuple[Block, Optional[int]]]:
    """An end-block and its cut vertex (``None`` if ``g`` is one block)."""
    dec = block_decomposition(g)
    if len(dec.blocks) == 1:
        return dec.blocks[0], None
    ends = [dec.blocks[i] for i in dec.end_blocks]
    if prefer_two_connected:
        ends.sort(key=lambda b: (b.kind != "two-connected", min(b.vertices)))
    blk = ends[0]
    (x,) = blk.boundary
    return blk, x
