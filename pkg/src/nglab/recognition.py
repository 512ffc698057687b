"""Polynomial-time recognition of graphs with chi(G) + chi(complement G) = n + 1.

For each candidate chromatic number ``k`` the vertices are split by degree
into A (degree k-1), B (higher) and C (lower), and the split is checked
against the only three forms such a graph can take: G[A] a clique, an
independent set or a 5-cycle, B a clique joined completely to A, C an
independent set with no edges to A, and a size condition pinning chi = k.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, Shape, classify_induced, complement, members
from .oracles import chromatic_number

CONDITIONS = ("i", "ii", "iii", "iv", "v", "vi")


@dataclass(frozen=True)
class ABCPartition:
    k: int
    A: int
    B: int
    C: int

    @property
    def a(self) -> int:
        return self.A.bit_count()

    @property
    def b(self) -> int:
        return self.B.bit_count()

    @property
    def c(self) -> int:
        return self.C.bit_count()

    def as_lists(self) -> dict[str, list[int]]:
        return {"A": members(self.A), "B": members(self.B), "C": members(self.C)}


@dataclass
class ConditionReport:
    """Outcome of the six structural checks; ``witness`` explains each failure."""

    results: dict[str, bool] = field(default_factory=dict)
    witness: dict[str, object] = field(default_factory=dict)
    shape: Shape = Shape.OTHER
    # shapes of G[A] whose size condition holds
    matching: Shape = Shape.OTHER

    @property
    def passed(self) -> bool:
        return all(self.results.get(c, False) for c in CONDITIONS)


@dataclass(frozen=True)
class NGClassification:
    is_ng: bool
    k: int | None
    chi_complement: int | None
    partition: ABCPartition | None
    types: frozenset[int]

    def to_dict(self) -> dict:
        return {
            "is_ng": self.is_ng,
            "chi": self.k,
            "chi_complement": self.chi_complement,
            "types": sorted(self.types),
            "partition": self.partition.as_lists() if self.partition else None,
        }


def abc_candidate(g: Graph, k: int) -> ABCPartition:
    if not 1 <= k <= g.n:
        raise ValueError(f"candidate k={k} outside 1..{g.n}")
    A = B = C = 0
    for v, d in enumerate(g.degrees):
        if d == k - 1:
            A |= 1 << v
        elif d > k - 1:
            B |= 1 << v
        else:
            C |= 1 << v
    return ABCPartition(k, A, B, C)


def _first_missing(g: Graph, src: int, dst: int) -> tuple[int, int] | None:
    for u in members(src):
        miss = dst & ~g.adj[u] & ~(1 << u)
        if miss:
            return u, members(miss)[0]
    return None


def _first_present(g: Graph, src: int, dst: int) -> tuple[int, int] | None:
    for u in members(src):
        hit = dst & g.adj[u]
        if hit:
            return u, members(hit)[0]
    return None


_SIZE_RULES = (
    (Shape.CLIQUE, lambda p: p.a + p.b),
    (Shape.INDEPENDENT, lambda p: p.b + 1),
    (Shape.FIVE_CYCLE, lambda p: p.b + 3),
)


def check_ng_conditions(g: Graph, p: ABCPartition) -> ConditionReport:
    rep = ConditionReport()
    shape = classify_induced(g, p.A) if p.A else Shape.OTHER
    rep.shape = shape
    rep.results["i"] = bool(p.A) and shape != Shape.OTHER
    if not rep.results["i"]:
        rep.witness["i"] = "A is empty" if not p.A else "G[A] is not a clique, independent set or 5-cycle"

    miss = _first_missing(g, p.B, p.B)
    rep.results["ii"] = miss is None
    if miss:
        rep.witness["ii"] = miss
    hit = _first_present(g, p.C, p.C)
    rep.results["iii"] = hit is None
    if hit:
        rep.witness["iii"] = hit
    miss = _first_missing(g, p.A, p.B)
    rep.results["iv"] = miss is None
    if miss:
        rep.witness["iv"] = miss
    hit = _first_present(g, p.A, p.C)
    rep.results["v"] = hit is None
    if hit:
        rep.witness["v"] = hit

    counts = {}
    for s, rule in _SIZE_RULES:
        if s in shape:
            counts[s.name.lower()] = rule(p)
            if rule(p) == p.k:
                rep.matching |= s
    rep.results["vi"] = rep.matching != Shape.OTHER
    if not rep.results["vi"]:
        rep.witness["vi"] = {"k": p.k, "counts": counts}
    return rep


def _types(matching: Shape) -> frozenset[int]:
    out = set()
    if Shape.CLIQUE in matching:
        out.add(1)
    if Shape.INDEPENDENT in matching:
        out.add(2)
    if Shape.FIVE_CYCLE in matching:
        out.add(3)
    return frozenset(out)


NOT_NG = NGClassification(False, None, None, None, frozenset())


def passing_candidates(g: Graph) -> list[tuple[ABCPartition, ConditionReport]]:
    """Every k in 1..n whose degree split passes all six checks."""
    out = []
    for k in range(1, g.n + 1):
        p = abc_candidate(g, k)
        rep = check_ng_conditions(g, p)
        if rep.passed:
            out.append((p, rep))
    return out


def recognize_ng(g: Graph) -> NGClassification:
    """Decide membership and, for members, chi and the ABC split; O(n^3)."""
    for k in range(1, g.n + 1):
        p = abc_candidate(g, k)
        if not p.A:
            continue
        rep = check_ng_conditions(g, p)
        if rep.passed:
            return NGClassification(True, k, g.n + 1 - k, p, _types(rep.matching))
    return NOT_NG


def is_ng_oracle(g: Graph, max_n: int | None = None) -> bool:
    """Direct check of chi(G) + chi(complement G) == n + 1 with exact coloring."""
    if g.n == 0:
        return False
    return chromatic_number(g, max_n) + chromatic_number(complement(g), max_n) == g.n + 1
