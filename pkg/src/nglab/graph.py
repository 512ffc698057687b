"""Bitset graphs on at most 64 vertices and the structural operations on them."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_VERTICES = 64

VertexSet = int | Iterable[int]


def as_mask(vertices: VertexSet) -> int:
    """Normalize a vertex collection (iterable of indices, or a bitmask) to a bitmask."""
    if isinstance(vertices, (int, np.integer)):
        return int(vertices)
    mask = 0
    for v in vertices:
        mask |= 1 << int(v)
    return mask


def members(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbor bitmask of ``v``.

    Instances are immutable and validated on construction.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbors outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def from_key(cls, key: int, n: int) -> Graph:
        """Inverse of :meth:`key`."""
        total = pair_count(n)
        if key < 0 or key >> total:
            raise ValueError(f"edge key {key} does not fit {n} vertices")
        adj = [0] * n
        bit = total - 1
        for v in range(1, n):
            for u in range(v):
                if key >> bit & 1:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                bit -= 1
        return cls(n, tuple(adj))

    def key(self) -> int:
        """Edge key: the graph6 upper-triangle bit string read as a binary numeral.

        Pairs are ordered (0,1), (0,2), (1,2), (0,3), ... and the first pair is
        the most significant bit.  Labeled enumeration runs in increasing key
        order and the canonical form minimizes it.
        """
        key = 0
        for v in range(1, self.n):
            row = self.adj[v]
            for u in range(v):
                key = key << 1 | (row >> u & 1)
        return key

    @cached_property
    def array(self) -> np.ndarray:
        """Adjacency bitmasks as ``int64`` (for the kernels; valid for n <= 63)."""
        if self.n > 63:
            raise ValueError("int64 bitset kernels support at most 63 vertices")
        return np.array(self.adj, dtype=np.int64)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in members(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            reach = 0
            for v in members(frontier):
                reach |= self.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == self.vertex_mask

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph whose vertex ``i`` is this graph's vertex ``perm[i]``."""
        pos = {v: i for i, v in enumerate(perm)}
        return Graph.from_edges(self.n, ((pos[u], pos[v]) for u, v in self.edges()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """``G[S]`` with vertices renumbered 0..|S|-1 in increasing original order."""
    mask = as_mask(s)
    if mask < 0 or mask >> g.n:
        raise ValueError(f"vertex set {members(mask) if mask >= 0 else mask} not within 0..{g.n - 1}")
    verts = members(mask)
    new_adj = []
    for v in verts:
        row = g.adj[v] & mask
        new_adj.append(sum(1 << i for i, u in enumerate(verts) if row >> u & 1))
    return Graph(len(verts), tuple(new_adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, g.vertex_mask & ~(1 << v))


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for h in graphs:
        adj.extend(row << offset for row in h.adj)
        offset += h.n
    return Graph(offset, tuple(adj))


class Shape(enum.Flag):
    """Shape of an induced subgraph.  ``OTHER`` is the empty flag."""

    OTHER = 0
    CLIQUE = enum.auto()
    INDEPENDENT = enum.auto()
    FIVE_CYCLE = enum.auto()


def is_clique(g: Graph, mask: int) -> bool:
    return all(g.adj[v] & mask == mask & ~(1 << v) for v in members(mask))


def is_independent(g: Graph, mask: int) -> bool:
    return all(g.adj[v] & mask == 0 for v in members(mask))


def is_five_cycle(g: Graph, mask: int) -> bool:
    verts = members(mask)
    if len(verts) != 5:
        return False
    if any((g.adj[v] & mask).bit_count() != 2 for v in verts):
        return False
    return induced_subgraph(g, mask).is_connected()


def classify_induced(g: Graph, s: VertexSet) -> Shape:
    mask = as_mask(s)
    shape = Shape.OTHER
    if is_clique(g, mask):
        shape |= Shape.CLIQUE
    if is_independent(g, mask):
        shape |= Shape.INDEPENDENT
    if is_five_cycle(g, mask):
        shape |= Shape.FIVE_CYCLE
    return shape
