"""Named graph families and an NG-graph builder used as fixtures."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .graph import Graph, complement, disjoint_union
from .graph6 import emit_graph6
from .recognition import NGClassification, recognize_ng


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts:
        raise ValueError("need at least one part")
    if any(p < 1 for p in parts):
        raise ValueError(f"part sizes must be >= 1, got {list(parts)}")
    label = [i for i, size in enumerate(parts) for _ in range(size)]
    n = len(label)
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if label[u] != label[v]))


def clique_plus_independent(t: int) -> Graph:
    """``K_t`` together with ``t - 1`` isolated vertices (clique first)."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return disjoint_union(Graph.complete(t), Graph.empty(t - 1))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def integer_partitions(n: int, largest: int | None = None):
    """Partitions of ``n`` as non-increasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


class BlueprintShape(enum.Enum):
    CLIQUE_A = "clique"
    INDEPENDENT_A = "independent"
    FIVE_CYCLE_A = "five-cycle"


@dataclass(frozen=True)
class NGBlueprint:
    """Blocks A, B (clique) and C (independent); ``bc_edges[i][j]`` joins B_i to C_j.

    Set ``bc_edges`` to ``None`` and give ``seed`` for a random B-C pattern
    with edge probability ``density``.
    """

    shape: BlueprintShape
    a: int
    b: int
    c: int
    bc_edges: tuple[tuple[bool, ...], ...] | None = None
    seed: int | None = None
    density: float = 0.5

    def edge_matrix(self) -> np.ndarray:
        if self.bc_edges is None:
            if self.seed is None:
                return np.zeros((self.b, self.c), dtype=bool)
            rng = np.random.default_rng(self.seed)
            return rng.random((self.b, self.c)) < self.density
        mat = np.array(self.bc_edges, dtype=bool).reshape(len(self.bc_edges), -1)
        if mat.shape != (self.b, self.c):
            raise ValueError(f"bc_edges is {mat.shape}, expected {(self.b, self.c)}")
        return mat


def build_ng(bp: NGBlueprint) -> Graph:
    """Assemble A, then B, then C (in that vertex order) per the blueprint.

    The result is always an NG-graph, but its degree-based split may group
    vertices differently from the blueprint blocks.
    """
    a = 5 if bp.shape is BlueprintShape.FIVE_CYCLE_A else bp.a
    if bp.shape is BlueprintShape.FIVE_CYCLE_A and bp.a not in (0, 5):
        raise ValueError("a five-cycle A block has exactly 5 vertices")
    if a < 1:
        raise ValueError("the A block must be nonempty")
    if bp.b < 0 or bp.c < 0:
        raise ValueError("block sizes must be non-negative")
    mat = bp.edge_matrix()
    A = range(a)
    B = range(a, a + bp.b)
    C = range(a + bp.b, a + bp.b + bp.c)
    edges = []
    if bp.shape is BlueprintShape.CLIQUE_A:
        edges += [(u, v) for u in A for v in A if u < v]
    elif bp.shape is BlueprintShape.FIVE_CYCLE_A:
        edges += [(i, (i + 1) % 5) for i in range(5)]
    edges += [(u, v) for u in B for v in B if u < v]
    edges += [(u, v) for u in A for v in B]
    edges += [(B[i], C[j]) for i in range(bp.b) for j in range(bp.c) if mat[i, j]]
    return Graph.from_edges(a + bp.b + bp.c, edges)


def build_ng_classified(bp: NGBlueprint) -> tuple[Graph, NGClassification]:
    g = build_ng(bp)
    return g, recognize_ng(g)


def pendant_clique_example() -> Graph:
    """One apex joined to a 5-clique whose vertices each carry one pendant vertex.

    Vertex 0 is A, 1..5 are B, and 6..10 the pendants (vertex 5+i hangs off i).
    """
    matching = tuple(tuple(i == j for j in range(5)) for i in range(5))
    return build_ng(NGBlueprint(BlueprintShape.CLIQUE_A, 1, 5, 5, matching))


def fixture_catalog() -> dict[str, Graph]:
    cat = {
        "K1": Graph.complete(1),
        "K3": Graph.complete(3),
        "K5": Graph.complete(5),
        "C5": cycle(5),
        "C7": cycle(7),
        "K_3_1_1": complete_multipartite((3, 1, 1)),
        "K_3_2": complete_multipartite((3, 2)),
        "K_2_2": complete_multipartite((2, 2)),
        "K3_plus_I2": clique_plus_independent(3),
        "petersen": petersen(),
        "pendant_clique": pendant_clique_example(),
    }
    for t in (2, 3, 4):
        cat[f"K{t}_plus_I{t - 1}_complement"] = complement(clique_plus_independent(t))
    return cat


def write_fixture_catalog(directory: str | Path) -> Path:
    """Write ``fixtures.g6`` plus ``fixtures.json`` (name -> graph6) into ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    manifest = {name: emit_graph6(g) for name, g in fixture_catalog().items()}
    (directory / "fixtures.g6").write_text("".join(s + "\n" for s in manifest.values()), encoding="ascii")
    path = directory / "fixtures.json"
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path
