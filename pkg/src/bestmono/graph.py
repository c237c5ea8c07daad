"""Small simple graphs stored as adjacency bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .sequences import DegreeSequence


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``; ``adj[v]`` has bit ``u`` set iff uv is an edge."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if row >> self.n:
                raise ValueError(f"vertex {v} adjacent outside 0..{self.n - 1}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence.of(self.degrees())

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def complement(self) -> Graph:
        full = self.full_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(row << shift for row in other.adj))

    def join(self, other: Graph) -> Graph:
        u = self.union(other)
        left = self.full_mask
        right = ((1 << other.n) - 1) << self.n
        adj = [row | right if v < self.n else row | left for v, row in enumerate(u.adj)]
        return Graph(u.n, tuple(adj))

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = list(self.adj)
        for u, v in edges:
            if u == v or adj[u] >> v & 1:
                raise ValueError(f"edge {u}-{v} is a loop or already present")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_vertices(self, mask: int) -> Graph:
        """Induced subgraph on the vertices outside ``mask``, relabelled in order."""
        keep = [v for v in range(self.n) if not mask >> v & 1]
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for u in _bits(self.adj[v] & ~mask):
                row |= 1 << index[u]
            adj.append(row)
        return Graph(len(keep), tuple(adj))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data: dict) -> Graph:
        return cls.from_edges(int(data["n"]), (tuple(e) for e in data["edges"]))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


bits = _bits
