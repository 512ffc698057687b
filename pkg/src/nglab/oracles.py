"""Exact brute-force ground truth: chi, Aut, D, chi_D and their subgroup variants.

Colorings are exposed 1-based (colors ``1..r``).  Every routine guards its
input size; pass ``max_n`` to lift a guard deliberately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .errors import GuardError
from .graph import Graph, VertexSet, as_mask, delete_vertex, members

CHI_MAX_N = 16
AUT_MAX_N = 10
DIST_MAX_N = 10


def _guard(what: str, n: int, limit: int, override: int | None) -> None:
    cap = limit if override is None else override
    if n > cap:
        raise GuardError(what, n, cap)


@dataclass(frozen=True, eq=False)
class AutomorphismSet:
    """Explicit list of vertex permutations (``perms[k][v]`` is the image of ``v``)."""

    n: int
    perms: np.ndarray

    def __len__(self) -> int:
        return self.perms.shape[0]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        for row in self.perms:
            yield tuple(int(x) for x in row)

    def as_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self)

    def non_identity(self) -> np.ndarray:
        ident = np.arange(self.n)
        keep = np.any(self.perms != ident, axis=1)
        return np.ascontiguousarray(self.perms[keep])

    @property
    def is_trivial(self) -> bool:
        return len(self.non_identity()) == 0

    def restrict_to(self, vertices: VertexSet) -> AutomorphismSet:
        """Action on an invariant vertex set, renumbered as in ``induced_subgraph``.

        Raises ``ValueError`` if some element does not map the set to itself.
        """
        verts = members(as_mask(vertices))
        index = {v: i for i, v in enumerate(verts)}
        rows = set()
        for perm in self:
            try:
                rows.add(tuple(index[perm[v]] for v in verts))
            except KeyError:
                raise ValueError("vertex set is not invariant under the group") from None
        arr = np.array(sorted(rows), dtype=np.int64).reshape(len(rows), len(verts))
        return AutomorphismSet(len(verts), arr)

    def is_group(self) -> bool:
        elems = self.as_set()
        if tuple(range(self.n)) not in elems:
            return False
        for p in elems:
            inv = [0] * self.n
            for v, w in enumerate(p):
                inv[w] = v
            if tuple(inv) not in elems:
                return False
            for q in elems:
                if tuple(p[q[v]] for v in range(self.n)) not in elems:
                    return False
        return True


def optimal_coloring(g: Graph, max_n: int | None = None) -> list[int]:
    """A proper coloring with ``chromatic_number(g)`` colors, 1-based."""
    _guard("chromatic_number", g.n, CHI_MAX_N, max_n)
    _, colors = kernels.chromatic_kernel(g.array)
    return [int(c) + 1 for c in colors]


def chromatic_number(g: Graph, max_n: int | None = None) -> int:
    _guard("chromatic_number", g.n, CHI_MAX_N, max_n)
    return int(kernels.chromatic_number_kernel(g.array))


def is_color_critical(g: Graph, v: int, max_n: int | None = None) -> bool:
    """True iff deleting ``v`` lowers the chromatic number."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} not in graph on {g.n} vertices")
    return chromatic_number(delete_vertex(g, v), max_n) < chromatic_number(g, max_n)


def automorphisms(g: Graph, max_n: int | None = None) -> AutomorphismSet:
    _guard("automorphisms", g.n, AUT_MAX_N, max_n)
    return AutomorphismSet(g.n, kernels.automorphism_kernel(g.array, 0))


def restricted_automorphisms(g: Graph, fixed: VertexSet, max_n: int | None = None) -> AutomorphismSet:
    """Pointwise stabilizer of ``fixed`` inside ``Aut(g)``."""
    _guard("automorphisms", g.n, AUT_MAX_N, max_n)
    mask = as_mask(fixed)
    if mask >> g.n:
        raise ValueError("fixed set exceeds the vertex range")
    return AutomorphismSet(g.n, kernels.automorphism_kernel(g.array, mask))


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    if sorted(perm) != list(range(g.n)):
        return False
    return all(g.has_edge(perm[u], perm[v]) for u, v in g.edges())


def is_proper(g: Graph, coloring: Sequence[int]) -> bool:
    return all(coloring[u] != coloring[v] for u, v in g.edges())


def is_distinguishing(g: Graph, coloring: Sequence[int], auts: AutomorphismSet) -> bool:
    """True iff no non-identity element of ``auts`` preserves every color."""
    if len(coloring) != g.n:
        raise ValueError("coloring length does not match the graph")
    colors = np.asarray(coloring)
    perms = auts.non_identity()
    if len(perms) == 0:
        return True
    return bool(np.all(np.any(colors[perms] != colors, axis=1)))


def _auts_or_full(g: Graph, auts: AutomorphismSet | None, max_n: int | None) -> AutomorphismSet:
    if auts is None:
        return automorphisms(g, max_n=max_n)
    if auts.n != g.n:
        raise ValueError("automorphism set was computed on a graph of different order")
    return auts


def distinguishing_coloring(
    g: Graph, auts: AutomorphismSet | None = None, *, proper: bool = False, max_n: int | None = None
) -> list[int]:
    """A minimum-size (proper, if asked) distinguishing coloring, 1-based."""
    _guard("distinguishing search", g.n, DIST_MAX_N, max_n)
    group = _auts_or_full(g, auts, max_n)
    if g.n == 0:
        return []
    start = chromatic_number(g, max_n=max(CHI_MAX_N, g.n)) if proper else 1
    _, coloring = kernels.min_distinguishing_colors(g.array, group.non_identity(), start, proper)
    return [int(c) + 1 for c in coloring]


def distinguishing_number(g: Graph, auts: AutomorphismSet | None = None, max_n: int | None = None) -> int:
    """``D(g)``, or ``D^Gamma(g)`` when a subgroup is passed.  0 for the empty graph."""
    return max(distinguishing_coloring(g, auts, max_n=max_n), default=0)


def distinguishing_chromatic_number(
    g: Graph, auts: AutomorphismSet | None = None, max_n: int | None = None
) -> int:
    """``chi_D(g)``, or ``chi_D^Gamma(g)`` when a subgroup is passed."""
    return max(distinguishing_coloring(g, auts, proper=True, max_n=max_n), default=0)


def distinguishing_colorings(
    g: Graph, auts: AutomorphismSet | None, r: int, *, proper: bool = False, max_n: int | None = None
) -> list[list[int]]:
    """Every distinguishing coloring with colors from ``1..r``, up to renaming colors."""
    _guard("distinguishing search", g.n, DIST_MAX_N, max_n)
    auts = _auts_or_full(g, auts, max_n)
    count, found = kernels.distinguishing_search(g.array, auts.non_identity(), r, proper, True)
    return [[int(c) + 1 for c in row] for row in found[:count]]

