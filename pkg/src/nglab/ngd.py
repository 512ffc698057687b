"""Deciding chi_D(G) + chi_D(complement G) = n + D(G) for NG-graphs.

Type 1 graphs (G[A] a clique) are handled in closed form through the ABLM
refinement: C splits into L (adjacent to all of B) and M (the rest), and

    chi_D(G)  = b + max(a, l, x)
    chi_D(G') = m + max(a + l, y)         (G' the complement)

where x and y count the colors forced above the b colors on B (resp. the
m colors on M) when B u M must be distinguished under the automorphisms
fixing A and L.  A Type 1 graph is in the class iff D(G) = max(a, l).
Type 2 graphs go through their (Type 1) complement; Type 3 graphs are never
in the class; anything else falls back to exact search.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass

from . import oracles
from .errors import GuardError, NotType1Error
from .graph import Graph, complement, induced_subgraph, members
from .oracles import AutomorphismSet
from .recognition import NGClassification, recognize_ng

DEFAULT_ORACLE_N = 8


@dataclass(frozen=True)
class ABLMPartition:
    A: int
    B: int
    L: int
    M: int

    @property
    def a(self) -> int:
        return self.A.bit_count()

    @property
    def b(self) -> int:
        return self.B.bit_count()

    @property
    def l(self) -> int:  # noqa: E743
        return self.L.bit_count()

    @property
    def m(self) -> int:
        return self.M.bit_count()


def ablm_partition(g: Graph, cls: NGClassification | None = None) -> ABLMPartition:
    cls = recognize_ng(g) if cls is None else cls
    if not cls.is_ng or 1 not in cls.types:
        raise NotType1Error("ABLM partition needs a Type 1 NG-graph")
    p = cls.partition
    L = 0
    for v in members(p.C):
        if g.adj[v] & p.B == p.B:
            L |= 1 << v
    return ABLMPartition(p.A, p.B, L, p.C & ~L)


def _extra_colors(g: Graph, clique: int, indep: int) -> int:
    """Colors needed beyond |clique| to properly distinguish ``indep`` when ``clique`` is pinned.

    Vertices of ``indep`` with equal neighborhoods can be freely permuted,
    so each such class needs distinct colors, none shared with its
    neighbors in ``clique``.  Negative shortfalls clamp to zero.
    """
    size = clique.bit_count()
    classes = Counter(g.adj[v] for v in members(indep))
    worst = 0
    for nbhd, count in classes.items():
        worst = max(worst, count - (size - (nbhd & clique).bit_count()))
    return worst


def compute_x(g: Graph, p: ABLMPartition) -> int:
    return _extra_colors(g, p.B, p.M)


def compute_y(g: Graph, p: ABLMPartition) -> int:
    # B and M swap clique/independent roles in the complement
    return _extra_colors(complement(g), p.M, p.B)


def chi_d_type1(g: Graph, p: ABLMPartition, x: int, y: int) -> tuple[int, int]:
    """Closed-form ``(chi_D(G), chi_D(complement G))`` for a Type 1 NG-graph."""
    if p.a == 0:
        raise NotType1Error("A must be nonempty")
    return p.b + max(p.a, p.l, x), p.m + max(p.a + p.l, y)


def fixing_group(g: Graph, p: ABLMPartition, max_n: int | None = None) -> AutomorphismSet:
    """Automorphisms fixing A and L pointwise, acting on ``G[B u M]``."""
    return oracles.restricted_automorphisms(g, p.A | p.L, max_n=max_n).restrict_to(p.B | p.M)


def x_oracle(g: Graph, p: ABLMPartition, max_n: int | None = None) -> int:
    gamma = fixing_group(g, p, max_n)
    sub = induced_subgraph(g, p.B | p.M)
    return oracles.distinguishing_chromatic_number(sub, gamma, max_n=max_n) - p.b


def y_oracle(g: Graph, p: ABLMPartition, max_n: int | None = None) -> int:
    gamma = fixing_group(g, p, max_n)
    sub = induced_subgraph(complement(g), p.B | p.M)
    return oracles.distinguishing_chromatic_number(sub, gamma, max_n=max_n) - p.m


def distinguishing_number_formula(g: Graph, p: ABLMPartition, max_n: int | None = None) -> int:
    """D(G) = max(a, l, D^Gamma(G[B u M])), Gamma fixing A and L pointwise.

    Needs automorphisms of the full graph but searches colorings only on
    B u M, so the exponential part runs on ``b + m`` vertices.
    """
    cap = oracles.DIST_MAX_N if max_n is None else max_n
    if p.b + p.m > cap:
        raise GuardError("distinguishing number of G[B u M]", p.b + p.m, cap)
    # the stabilizer search only branches on B u M, so the full-graph guard can be lifted
    gamma = fixing_group(g, p, max_n=max(cap, g.n))
    sub = induced_subgraph(g, p.B | p.M)
    return max(p.a, p.l, oracles.distinguishing_number(sub, gamma, max_n=cap))


@dataclass
class NGDReport:
    is_ngd: bool
    method: str
    a: int | None = None
    b: int | None = None
    l: int | None = None  # noqa: E741
    m: int | None = None
    x: int | None = None
    y: int | None = None
    D: int | None = None
    chi_d: int | None = None
    chi_d_complement: int | None = None
    # which side the closed form was evaluated on ("graph" or "complement")
    params_of: str | None = None
    # for Type 2 graphs: which equality decided membership ("a", "isolated_b", "both" or None)
    criterion: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def _type1_report(g: Graph, cls: NGClassification, max_n: int | None) -> NGDReport:
    p = ablm_partition(g, cls)
    x, y = compute_x(g, p), compute_y(g, p)
    d = distinguishing_number_formula(g, p, max_n)
    chi_d, chi_d_bar = chi_d_type1(g, p, x, y)
    return NGDReport(
        is_ngd=d == max(p.a, p.l),
        method="type1-closed-form",
        a=p.a, b=p.b, l=p.l, m=p.m, x=x, y=y, D=d,
        chi_d=chi_d, chi_d_complement=chi_d_bar, params_of="graph",
    )


def type2_criterion(g: Graph, cls: NGClassification, d: int) -> str | None:
    """Which of ``D = |A|`` / ``D = #(B vertices with no C neighbor)`` holds."""
    p = cls.partition
    isolated_b = sum(1 for v in members(p.B) if not g.adj[v] & p.C)
    hits = [name for name, val in (("a", p.a), ("isolated_b", isolated_b)) if val == d]
    if len(hits) == 2:
        return "both"
    return hits[0] if hits else None


def decide_ngd(g: Graph, max_oracle_n: int = DEFAULT_ORACLE_N, cls: NGClassification | None = None) -> NGDReport:
    """NGD membership: closed forms for NG-graphs, exact search otherwise.

    Graphs that are both Type 1 and Type 2 (|A| = 1) take the Type 1 route.
    Non-NG graphs need ``g.n <= max_oracle_n``.
    """
    if g.n == 0:
        raise ValueError("decide_ngd needs at least one vertex")
    cls = recognize_ng(g) if cls is None else cls
    if cls.is_ng and 1 in cls.types:
        return _type1_report(g, cls, None)
    if cls.is_ng and 2 in cls.types:
        gbar = complement(g)
        rep = _type1_report(gbar, recognize_ng(gbar), None)
        rep.method = "type2-closed-form"
        rep.params_of = "complement"
        rep.chi_d, rep.chi_d_complement = rep.chi_d_complement, rep.chi_d
        rep.criterion = type2_criterion(g, cls, rep.D)
        return rep
    if cls.is_ng:
        return NGDReport(is_ngd=False, method="type3-theorem")
    if g.n > max_oracle_n:
        raise GuardError("NGD oracle for a non-NG graph", g.n, max_oracle_n)
    d, chi_d, chi_d_bar = ngd_oracle_values(g, max_n=max(max_oracle_n, oracles.DIST_MAX_N))
    return NGDReport(
        is_ngd=chi_d + chi_d_bar == g.n + d, method="oracle", D=d, chi_d=chi_d, chi_d_complement=chi_d_bar
    )


def ngd_oracle_values(g: Graph, max_n: int | None = None) -> tuple[int, int, int]:
    """Exact ``(D(G), chi_D(G), chi_D(complement G))``; Aut is shared by both sides."""
    auts = oracles.automorphisms(g, max_n=max_n)
    d = oracles.distinguishing_number(g, auts, max_n=max_n)
    chi_d = oracles.distinguishing_chromatic_number(g, auts, max_n=max_n)
    chi_d_bar = oracles.distinguishing_chromatic_number(complement(g), auts, max_n=max_n)
    return d, chi_d, chi_d_bar


def is_ngd_oracle(g: Graph, max_n: int = DEFAULT_ORACLE_N) -> bool:
    """Direct check of chi_D(G) + chi_D(complement G) == n + D(G) by exact search."""
    if g.n > max_n:
        raise GuardError("is_ngd_oracle", g.n, max_n)
    d, chi_d, chi_d_bar = ngd_oracle_values(g, max_n=max(max_n, oracles.DIST_MAX_N))
    return chi_d + chi_d_bar == g.n + d
