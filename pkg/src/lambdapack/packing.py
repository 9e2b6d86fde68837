"""Λ-packings (sets of vertex-disjoint 3-vertex paths) and query constraints."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidPacking, PreconditionError
from .graph import Edge, Graph, edge

Path3 = Tuple[int, int, int]


def normalize_path(p: Sequence[int]) -> Path3:
    """Orient a path ``(a, b, c)`` so that ``a < c``; ``b`` is the centre."""
    a, b, c = p
    return (a, b, c) if a < c else (c, b, a)


@dataclass(frozen=True)
class LambdaPacking:
    paths: Tuple[Path3, ...]

    def __init__(self, paths: Iterable[Sequence[int]] = ()):
        object.__setattr__(self, "paths", tuple(sorted(normalize_path(p) for p in paths)))

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __add__(self, other: "LambdaPacking") -> "LambdaPacking":
        return LambdaPacking(self.paths + other.paths)

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(v for p in self.paths for v in p)

    def edges(self) -> List[Edge]:
        return sorted(e for a, b, c in self.paths for e in (edge(a, b), edge(b, c)))

    def uses_edge(self, u: int, v: int) -> bool:
        e = edge(u, v)
        return any(e in (edge(a, b), edge(b, c)) for a, b, c in self.paths)

    def contains_path(self, p: Sequence[int]) -> bool:
        return normalize_path(p) in self.paths

    def validate(self, host: Graph) -> None:
        seen = set()
        for p in self.paths:
            a, b, c = p
            for x in p:
                if x not in host:
                    raise InvalidPacking(f"path {p} uses vertex {x} outside the host")
                if x in seen:
                    raise InvalidPacking(f"vertex {x} used twice")
                seen.add(x)
            if not (host.has_edge(a, b) and host.has_edge(b, c)):
                raise InvalidPacking(f"{p} is not a path of the host")

    def is_valid(self, host: Graph) -> bool:
        try:
            self.validate(host)
        except InvalidPacking:
            return False
        return True

    def is_factor_of(self, host: Graph) -> bool:
        return self.is_valid(host) and self.vertices == frozenset(host.vertices)

    def to_json(self) -> list:
        return [list(p) for p in self.paths]


@dataclass(frozen=True)
class PackingConstraint:
    forbidden_vertices: FrozenSet[int] = frozenset()
    forbidden_edges: FrozenSet[Edge] = frozenset()
    required_path: Optional[Path3] = None
    required_edge: Optional[Edge] = None

    def __post_init__(self):
        fe = frozenset(edge(*e) for e in self.forbidden_edges)
        if self.required_edge is not None and self.required_path is not None:
            raise PreconditionError("give either a required path or a required edge, not both")
        object.__setattr__(self, "forbidden_vertices", frozenset(self.forbidden_vertices))
        object.__setattr__(self, "forbidden_edges", fe)
        if self.required_edge is not None:
            object.__setattr__(self, "required_edge", edge(*self.required_edge))
            if self.required_edge in fe or set(self.required_edge) & self.forbidden_vertices:
                raise PreconditionError("required edge is forbidden")
        if self.required_path is not None:
            p = normalize_path(self.required_path)
            object.__setattr__(self, "required_path", p)
            if set(p) & self.forbidden_vertices:
                raise PreconditionError("required path uses a forbidden vertex")
            if {edge(p[0], p[1]), edge(p[1], p[2])} & fe:
                raise PreconditionError("required path uses a forbidden edge")

    def is_empty(self) -> bool:
        return not (self.forbidden_vertices or self.forbidden_edges or self.required_path or self.required_edge)

    def satisfied_by(self, p: LambdaPacking, host: Graph) -> bool:
        """Spanning check of ``p`` against ``host`` under this constraint."""
        want = frozenset(host.vertices) - self.forbidden_vertices
        if p.vertices != want or not p.is_valid(host):
            return False
        if any(p.uses_edge(*e) for e in self.forbidden_edges):
            return False
        if self.required_path is not None and not p.contains_path(self.required_path):
            return False
        if self.required_edge is not None and not p.uses_edge(*self.required_edge):
            return False
        return True

    def to_json(self) -> dict:
        return {
            "forbidden_vertices": sorted(self.forbidden_vertices),
            "forbidden_edges": [list(e) for e in sorted(self.forbidden_edges)],
            "required_path": list(self.required_path) if self.required_path else None,
            "required_edge": list(self.required_edge) if self.required_edge else None,
        }


NO_CONSTRAINT = PackingConstraint()


def paths_through_edge(g: Graph, u: int, v: int) -> List[Path3]:
    """All 3-vertex paths of ``g`` using edge ``uv``."""
    out = set()
    for w in g.neighbors(u) - {v}:
        out.add(normalize_path((w, u, v)))
    for w in g.neighbors(v) - {u}:
        out.add(normalize_path((u, v, w)))
    return sorted(out)


def paths_centered_at(g: Graph, y: int) -> List[Path3]:
    ns = sorted(g.neighbors(y))
    return [(a, y, c) for i, a in enumerate(ns) for c in ns[i + 1:]]


def all_paths(g: Graph) -> List[Path3]:
    return [p for y in g.vertices for p in paths_centered_at(g, y)]
