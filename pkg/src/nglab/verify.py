"""Exhaustive invariant suites.

Each ``check_*`` function sweeps a family of graphs, records one pass/fail
per (graph, claim) in a :class:`VerificationReport`, and keeps the graph6
string of every failure.  :func:`run_verification` strings them together
for the ``verify`` command; the acceptance tests call them individually with
their own size ranges.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import cached_property
from math import factorial

import numpy as np

from . import kernels, oracles
from .enumeration import canonical_key_bruteforce, enumerate_graphs, labeled_keys
from .generators import complete_multipartite, integer_partitions
from .graph import Graph, complement, delete_vertex, induced_subgraph, members
from .graph6 import emit_graph6, parse_graph6
from .ngd import (
    ablm_partition,
    chi_d_type1,
    compute_x,
    compute_y,
    decide_ngd,
    distinguishing_number_formula,
    fixing_group,
    is_ngd_oracle,
    type2_criterion,
    x_oracle,
    y_oracle,
)
from .recognition import passing_candidates, recognize_ng

FULL_SUITE_MAX_N = 6
RECOGNIZER_MAX_N = 7
SUBGROUP_MAX_N = 5
SAMPLE_SIZE = 100_000
SAMPLE_SEED = 20240601
MAX_LOGGED = 200

# Known isomorphism-class counts for n = 0..8.
CLASS_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346)


@dataclass
class SuiteResult:
    checked: int = 0
    failed: int = 0
    seconds: float = 0.0


@dataclass
class VerificationReport:
    suites: dict[str, SuiteResult] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    findings: list[dict] = field(default_factory=list)
    failures: int = 0

    def record(self, suite: str, ok: bool, g: Graph | None = None, claim: str = "") -> bool:
        res = self.suites.setdefault(suite, SuiteResult())
        res.checked += 1
        if not ok:
            res.failed += 1
            self.failures += 1
            if len(self.counterexamples) < MAX_LOGGED:
                entry = {"suite": suite, "claim": claim or suite}
                if g is not None:
                    entry["graph6"] = emit_graph6(g)
                self.counterexamples.append(entry)
        return ok

    def note(self, kind: str, g: Graph, **detail) -> None:
        if len(self.findings) < MAX_LOGGED:
            self.findings.append({"kind": kind, "graph6": emit_graph6(g), **detail})

    @contextmanager
    def timed(self, suite: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.suites.setdefault(suite, SuiteResult()).seconds += time.perf_counter() - start

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def summary_lines(self) -> list[str]:
        return [
            f"{'PASS' if r.failed == 0 else 'FAIL'} {name}: {r.checked - r.failed}/{r.checked} ({r.seconds:.2f}s)"
            for name, r in self.suites.items()
        ]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "failures": self.failures,
            "suites": {
                name: {"checked": r.checked, "failed": r.failed, "seconds": round(r.seconds, 4)}
                for name, r in self.suites.items()
            },
            "counterexamples": self.counterexamples,
            "findings": self.findings,
        }


class Profile:
    """Lazily computed oracle values for one graph, shared across suites."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n

    @cached_property
    def gbar(self) -> Graph:
        return complement(self.g)

    @cached_property
    def chi(self) -> int:
        return oracles.chromatic_number(self.g)

    @cached_property
    def chi_bar(self) -> int:
        return oracles.chromatic_number(self.gbar)

    @cached_property
    def auts(self) -> oracles.AutomorphismSet:
        return oracles.automorphisms(self.g)

    @cached_property
    def D(self) -> int:
        return oracles.distinguishing_number(self.g, self.auts)

    @cached_property
    def chi_d(self) -> int:
        return oracles.distinguishing_chromatic_number(self.g, self.auts)

    @cached_property
    def chi_d_bar(self) -> int:
        return oracles.distinguishing_chromatic_number(self.gbar, self.auts)

    @cached_property
    def cls(self):
        return recognize_ng(self.g)

    @property
    def is_ng(self) -> bool:
        return self.chi + self.chi_bar == self.n + 1

    @property
    def is_ngd(self) -> bool:
        return self.chi_d + self.chi_d_bar == self.n + self.D


def labeled_graphs(n: int):
    for key in labeled_keys(n):
        yield Graph.from_key(int(key), n)


# ------------------------------------------------------------- graph core


def check_graph_core(report: VerificationReport, n: int) -> None:
    with report.timed("complement_involution"):
        for g in labeled_graphs(n):
            gbar = complement(g)
            report.record("complement_involution", complement(gbar) == g, g)
            report.record(
                "complement_degree_sum",
                all(d + e == n - 1 for d, e in zip(g.degrees, gbar.degrees)),
                g,
            )
            report.record("graph6_round_trip", parse_graph6(emit_graph6(g)) == g, g)


def check_enumeration(report: VerificationReport, n: int) -> None:
    with report.timed("isomorphism_classes"):
        reps = list(enumerate_graphs(n, dedup=True))
        report.record("isomorphism_classes", len(reps) == CLASS_COUNTS[n], None, f"class count at n={n}")
        if n <= 5:
            keys = [canonical_key_bruteforce(g) for g in reps]
            report.record(
                "isomorphism_classes", len(set(keys)) == len(keys), None, f"pairwise non-isomorphic at n={n}"
            )


# ------------------------------------------------------------ bound suites


def check_bounds(report: VerificationReport, g: Graph, prof: Profile | None = None) -> Profile:
    """Chromatic and distinguishing Nordhaus-Gaddum bounds for one graph."""
    p = prof or Profile(g)
    n = g.n
    s, q = p.chi + p.chi_bar, p.chi * p.chi_bar
    report.record("chi_sum_upper", s <= n + 1, g, "chi + chi' <= n + 1")
    report.record("chi_sum_lower", s * s >= 4 * n, g, "chi + chi' >= 2 sqrt(n)")
    report.record("chi_product_lower", q >= n, g, "chi * chi' >= n")
    report.record("chi_product_upper", 4 * q <= (n + 1) ** 2, g, "chi * chi' <= ((n + 1) / 2)^2")
    sd, qd = p.chi_d + p.chi_d_bar, p.chi_d * p.chi_d_bar
    report.record("chid_sum_lower", sd * sd >= 4 * n, g, "chi_D + chi_D' >= 2 sqrt(n)")
    report.record("chid_product_lower", qd >= n, g, "chi_D * chi_D' >= n")
    report.record("chid_sum_upper", sd <= n + p.D, g, "chi_D + chi_D' <= n + D")
    report.record("chid_product_upper", 4 * qd <= (n + p.D) ** 2, g, "chi_D * chi_D' <= ((n + D) / 2)^2")
    report.record("chi_at_most_chid", p.chi <= p.chi_d and p.chi_bar <= p.chi_d_bar, g)
    aut_bar = oracles.automorphisms(p.gbar)
    report.record(
        "complement_same_automorphisms",
        aut_bar.as_set() == p.auts.as_set() and oracles.distinguishing_number(p.gbar, aut_bar) == p.D,
        g,
    )
    if n and g.is_connected() and g.edge_count() != n * (n - 1) // 2:
        odd_cycle = n % 2 == 1 and n >= 3 and all(d == 2 for d in g.degrees)
        if not odd_cycle:
            report.record("brooks_bound", p.chi <= g.max_degree(), g, "chi <= max degree")
    return p


def check_subgroup_bound(report: VerificationReport, g: Graph) -> None:
    """chi_D^G(g) + chi_D^G(g') <= n + D^G(g) for every pointwise stabilizer G."""
    gbar = complement(g)
    for fixed in range(1 << g.n):
        gamma = oracles.restricted_automorphisms(g, fixed)
        d = oracles.distinguishing_number(g, gamma)
        total = oracles.distinguishing_chromatic_number(g, gamma) + oracles.distinguishing_chromatic_number(
            gbar, gamma
        )
        report.record("subgroup_sum_bound", total <= g.n + d, g, f"fixed={members(fixed)}")


# -------------------------------------------------------------- recognizer


def check_recognizer(report: VerificationReport, g: Graph, prof: Profile) -> None:
    cls = prof.cls
    ok = cls.is_ng == prof.is_ng and (not cls.is_ng or cls.k == prof.chi)
    report.record("recognizer_matches_oracle", ok, g)
    if g.n:
        report.record("unique_passing_k", len(passing_candidates(g)) <= 1, g)


def check_recognizer_batch(report: VerificationReport, n: int, keys: np.ndarray) -> None:
    """Recognizer against the exact chi pair for a batch of labeled graphs."""
    with report.timed("recognizer_matches_oracle"):
        chis = kernels.chromatic_pairs_for_keys(np.ascontiguousarray(keys, dtype=np.int64), n)
        for key, (c, cbar) in zip(keys, chis):
            g = Graph.from_key(int(key), n)
            cls = recognize_ng(g)
            member = c + cbar == n + 1
            report.record("recognizer_matches_oracle", cls.is_ng == member and (not member or cls.k == c), g)
            if n:
                report.record("unique_passing_k", len(passing_candidates(g)) <= 1, g)


def check_ng_structure(report: VerificationReport, g: Graph, prof: Profile) -> None:
    """Complement duality, high-degree criticality and unique-color vertices for NG-graphs."""
    cls = prof.cls
    if not cls.is_ng:
        return
    bar = recognize_ng(prof.gbar)
    duality = (
        bar.is_ng
        and ((1 in cls.types) == (2 in bar.types))
        and ((2 in cls.types) == (1 in bar.types))
        and ((3 in cls.types) == (3 in bar.types))
        and bar.partition.A == cls.partition.A
    )
    report.record("complement_type_duality", duality, g)

    for x in range(g.n):
        if g.degree(x) > cls.k - 1:
            chi_minus = oracles.chromatic_number(delete_vertex(g, x))
            chi_bar_minus = oracles.chromatic_number(delete_vertex(prof.gbar, x))
            report.record(
                "high_degree_vertex_criticality",
                chi_minus < prof.chi and chi_bar_minus == prof.chi_bar,
                g,
                f"vertex {x}",
            )

    p = cls.partition
    if 1 in cls.types:
        candidates = members(p.A | p.B)
    elif 2 in cls.types:
        candidates = members(p.B)
    else:
        candidates = []
    for x in candidates:
        # x can sit alone in its color class of an optimal coloring iff G - x needs one color fewer
        report.record(
            "uniquely_colored_vertex",
            oracles.chromatic_number(delete_vertex(g, x)) == prof.chi - 1,
            g,
            f"vertex {x}",
        )


def check_ngd_color_classes(report: VerificationReport, g: Graph, prof: Profile) -> None:
    """In an NGD-graph, every color class of every minimum distinguishing coloring induces an NG-graph."""
    if g.n == 0 or not prof.is_ngd:
        return
    for coloring in oracles.distinguishing_colorings(g, prof.auts, prof.D):
        classes: dict[int, int] = {}
        for v, c in enumerate(coloring):
            classes[c] = classes.get(c, 0) | 1 << v
        ok = True
        for mask in classes.values():
            h = induced_subgraph(g, mask)
            if oracles.chromatic_number(h) + oracles.chromatic_number(complement(h)) != h.n + 1:
                ok = False
        report.record("ngd_color_classes_are_ng", ok, g, f"coloring {coloring}")


# ------------------------------------------------------ complete multipartite


def check_multipartite(report: VerificationReport, n: int) -> None:
    with report.timed("multipartite_chid_is_n"):
        for parts in integer_partitions(n):
            g = complete_multipartite(parts)
            prof = Profile(g)
            report.record("multipartite_chid_is_n", prof.chi_d == n, g)
            report.record("multipartite_complement_chid_is_d", prof.chi_d_bar == prof.D, g)
            report.record("multipartite_is_ngd", is_ngd_oracle(g), g)


# ------------------------------------------------------------ NGD analysis


def check_ngd_decision(report: VerificationReport, g: Graph, cls=None) -> None:
    """Closed-form NGD verdict against exact search, for one NG-graph."""
    cls = recognize_ng(g) if cls is None else cls
    if not cls.is_ng:
        return
    rep = decide_ngd(g, cls=cls)
    prof = Profile(g)
    report.record("ngd_decision_matches_oracle", rep.is_ngd == prof.is_ngd, g, f"method {rep.method}")
    if rep.D is not None:
        report.record("ngd_report_values_match_oracle", rep.D == prof.D, g, "D")
    if rep.chi_d is not None:
        report.record(
            "ngd_report_values_match_oracle",
            (rep.chi_d, rep.chi_d_complement) == (prof.chi_d, prof.chi_d_bar),
            g,
            "chi_D pair",
        )
    if 2 in cls.types:
        crit = type2_criterion(g, cls, prof.D)
        report.record("type2_criterion_matches", (crit is not None) == prof.is_ngd, g)
        if crit == "both" and prof.D is not None:
            report.note("type2_both_equalities_hold", g, D=prof.D)


def check_type1_properties(report: VerificationReport, g: Graph, cls=None) -> None:
    cls = recognize_ng(g) if cls is None else cls
    if not (cls.is_ng and 1 in cls.types):
        return
    p = ablm_partition(g, cls)
    x, y = compute_x(g, p), compute_y(g, p)
    prof = Profile(g)
    d = prof.D
    report.record("type1_x_y_nonnegative", x >= 0 and y >= 0, g)
    report.record("type1_x_plus_y_at_most_d", x + y <= d, g)
    report.record("type1_x_below_d", x < d, g)
    if p.l == 0:
        report.record("type1_y_below_d_when_l_empty", y < d, g)
    report.record("type1_l_empty_when_a_is_1", p.a != 1 or p.l == 0, g)
    report.record(
        "type1_ablm_degrees",
        all(g.degree(v) == p.b for v in members(p.L)) and all(g.degree(v) <= p.b - 1 for v in members(p.M)),
        g,
    )
    report.record("type1_d_at_least_max_a_l", d >= max(p.a, p.l), g)
    gamma = fixing_group(g, p)
    report.record("type1_aut_order", len(prof.auts) == factorial(p.a) * factorial(p.l) * len(gamma), g)
    report.record("type1_aut_factorization", _aut_factorizes(g, p, prof.auts), g)
    report.record("type1_d_formula", distinguishing_number_formula(g, p) == d, g)
    report.record("type1_x_matches_oracle", x == x_oracle(g, p), g)
    report.record("type1_y_matches_oracle", y == y_oracle(g, p), g)
    report.record("type1_chid_formulas", chi_d_type1(g, p, x, y) == (prof.chi_d, prof.chi_d_bar), g)


def _aut_factorizes(g: Graph, p, auts: oracles.AutomorphismSet) -> bool:
    """Every automorphism = (perm of A) x (perm of L) x (element fixing A and L)."""
    stab = oracles.restricted_automorphisms(g, p.A | p.L).as_set()
    A, L = members(p.A), members(p.L)
    for perm in auts:
        if any(perm[v] not in A for v in A) or any(perm[v] not in L for v in L):
            return False
        rest = list(perm)
        for v in A + L:
            rest[v] = v
        if tuple(rest) not in stab:
            return False
    return True


# ---------------------------------------------------------------- drivers


def run_labeled_suites(report: VerificationReport, n: int) -> None:
    check_graph_core(report, n)
    with report.timed("bounds_and_structure"):
        for g in labeled_graphs(n):
            prof = check_bounds(report, g)
            check_recognizer(report, g, prof)
            check_ng_structure(report, g, prof)
            check_ngd_color_classes(report, g, prof)
    if n <= SUBGROUP_MAX_N:
        with report.timed("subgroup_sum_bound"):
            for g in labeled_graphs(n):
                check_subgroup_bound(report, g)


def run_class_suites(report: VerificationReport, n: int) -> None:
    check_enumeration(report, n)
    with report.timed("ngd_and_type1"):
        for g in enumerate_graphs(n, dedup=True):
            cls = recognize_ng(g)
            if cls.is_ng:
                check_ngd_decision(report, g, cls)
                check_type1_properties(report, g, cls)
    if n:
        check_multipartite(report, n)


def recognizer_sample_keys(n: int, size: int = SAMPLE_SIZE, seed: int = SAMPLE_SEED) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(0, 1 << (n * (n - 1) // 2), size=size, dtype=np.int64)


def run_verification(max_n: int, recognizer_only: bool = False) -> VerificationReport:
    """Run every suite for all n up to ``max_n``.

    Full mode allows ``max_n <= 6``.  Recognizer-only mode covers all labeled
    graphs up to 6 vertices and a fixed-seed sample of labeled graphs at 7.
    """
    limit = RECOGNIZER_MAX_N if recognizer_only else FULL_SUITE_MAX_N
    if not 0 <= max_n <= limit:
        raise ValueError(f"max_n must be in 0..{limit} for this mode")
    report = VerificationReport()
    for n in range(max_n + 1):
        if recognizer_only:
            keys = labeled_keys(n) if n <= FULL_SUITE_MAX_N else recognizer_sample_keys(n)
            check_recognizer_batch(report, n, keys)
        else:
            run_labeled_suites(report, n)
            run_class_suites(report, n)
    return report

