import pytest
from hypothesis import given, settings, strategies as st

from nglab import oracles
from nglab.errors import GuardError, NotType1Error
from nglab.generators import (
    BlueprintShape, NGBlueprint, build_ng, clique_plus_independent, complete_multipartite, cycle,
    pendant_clique_example,
)
from nglab.graph import Graph, members
from nglab.ngd import (
    ablm_partition, chi_d_type1, compute_x, compute_y, decide_ngd, distinguishing_number_formula,
    is_ngd_oracle, ngd_oracle_values, x_oracle, y_oracle,
)
from nglab.recognition import recognize_ng


def test_ablm_clique_plus_independent():
    p = ablm_partition(clique_plus_independent(3))
    assert (p.a, p.b, p.l, p.m) == (3, 0, 2, 0)


def test_ablm_complete():
    p = ablm_partition(Graph.complete(5))
    assert (p.a, p.b, p.l, p.m) == (5, 0, 0, 0)


def test_ablm_rejects_non_type1():
    with pytest.raises(NotType1Error):
        ablm_partition(cycle(5))
    with pytest.raises(NotType1Error):
        ablm_partition(complete_multipartite((3, 2)))


def test_pendant_example_parameters():
    g = pendant_clique_example()
    p = ablm_partition(g)
    assert (p.a, p.b, p.l, p.m) == (1, 5, 0, 5)
    assert members(p.A) == [0]
    x, y = compute_x(g, p), compute_y(g, p)
    assert (x, y) == (0, 0)
    assert distinguishing_number_formula(g, p) == 3
    assert chi_d_type1(g, p, x, y) == (6, 6)


def test_pendant_example_decision():
    rep = decide_ngd(pendant_clique_example())
    assert not rep.is_ngd
    assert rep.method == "type1-closed-form"
    assert (rep.a, rep.b, rep.l, rep.m, rep.x, rep.y, rep.D) == (1, 5, 0, 5, 0, 0, 3)


@pytest.mark.slow
def test_pendant_example_oracle():
    assert ngd_oracle_values(pendant_clique_example(), max_n=11) == (3, 6, 6)


@pytest.mark.parametrize("t", [2, 3, 4])
def test_clique_plus_independent_formulas(t):
    g = clique_plus_independent(t)
    p = ablm_partition(g)
    assert chi_d_type1(g, p, compute_x(g, p), compute_y(g, p)) == (t, 2 * t - 1)
    assert distinguishing_number_formula(g, p) == t


def test_decide_examples():
    r = decide_ngd(complete_multipartite((3, 1, 1)))
    assert r.is_ngd and r.method == "type2-closed-form" and r.D == 3 and r.criterion in ("a", "both")
    r = decide_ngd(cycle(5))
    assert not r.is_ngd and r.method == "type3-theorem"
    r = decide_ngd(complete_multipartite((3, 2)))
    assert r.is_ngd and r.method == "oracle"
    assert (r.chi_d, r.chi_d_complement, r.D) == (5, 3, 3)


def test_decide_guard():
    with pytest.raises(GuardError):
        decide_ngd(cycle(9))
    assert not decide_ngd(cycle(9), max_oracle_n=9).is_ngd
    with pytest.raises(ValueError):
        decide_ngd(Graph.empty(0))


def test_oracle_examples():
    assert not is_ngd_oracle(cycle(7))
    assert is_ngd_oracle(complete_multipartite((2, 2)))
    with pytest.raises(GuardError):
        is_ngd_oracle(pendant_clique_example())


def test_report_dict_fields():
    d = decide_ngd(Graph.complete(3)).to_dict()
    assert {"is_ngd", "method", "a", "b", "l", "m", "x", "y", "D", "chi_d", "chi_d_complement"} <= set(d)


blueprints = st.builds(
    NGBlueprint,
    shape=st.just(BlueprintShape.CLIQUE_A),
    a=st.integers(1, 3),
    b=st.integers(0, 3),
    c=st.integers(0, 3),
    seed=st.integers(0, 10_000),
)


@settings(max_examples=60, deadline=None)
@given(blueprints)
def test_type1_formulas_match_oracle(bp):
    g = build_ng(bp)
    cls = recognize_ng(g)
    assert cls.is_ng
    if 1 not in cls.types:
        return
    p = ablm_partition(g, cls)
    x, y = compute_x(g, p), compute_y(g, p)
    assert x == x_oracle(g, p) and y == y_oracle(g, p)
    d, chi_d, chi_d_bar = ngd_oracle_values(g, max_n=10)
    assert distinguishing_number_formula(g, p) == d
    assert chi_d_type1(g, p, x, y) == (chi_d, chi_d_bar)
    assert x + y <= d and x < d
    assert decide_ngd(g, cls=cls).is_ngd == (chi_d + chi_d_bar == g.n + d)
