import pytest
from hypothesis import given, settings

from nglab import oracles
from nglab.errors import GuardError
from nglab.generators import clique_plus_independent, complete_multipartite, cycle, pendant_clique_example, petersen
from nglab.graph import Graph, complement, disjoint_union

from test_graph import graphs


def test_chromatic_numbers():
    assert oracles.chromatic_number(Graph.complete(5)) == 5
    assert oracles.chromatic_number(cycle(5)) == 3
    assert oracles.chromatic_number(petersen()) == 3
    assert oracles.chromatic_number(Graph.empty(0)) == 0
    assert oracles.chromatic_number(Graph.empty(4)) == 1


def test_optimal_coloring_is_proper_and_one_based():
    g = petersen()
    col = oracles.optimal_coloring(g)
    assert oracles.is_proper(g, col)
    assert sorted(set(col)) == [1, 2, 3]


def test_chromatic_guard():
    g = Graph.empty(17)
    with pytest.raises(GuardError):
        oracles.chromatic_number(g)
    assert oracles.chromatic_number(g, max_n=17) == 1


@pytest.mark.parametrize("g, order", [
    (Graph.complete(4), 24),
    (cycle(5), 10),
    (complete_multipartite((3, 1, 1)), 12),
    (petersen(), 120),
])
def test_automorphism_group_orders(g, order):
    auts = oracles.automorphisms(g)
    assert len(auts) == order
    assert auts.is_group()
    assert all(oracles.is_automorphism(g, p) for p in auts)


def test_restricted_automorphisms():
    g = cycle(5)
    assert len(oracles.restricted_automorphisms(g, range(5))) == 1
    assert len(oracles.restricted_automorphisms(g, [])) == 10
    assert len(oracles.restricted_automorphisms(g, [0])) == 2


def test_pendant_example_stabilizer():
    g = pendant_clique_example()
    gamma = oracles.restricted_automorphisms(g, [0], max_n=11)
    assert len(gamma) == 120


def test_automorphism_guard():
    with pytest.raises(GuardError):
        oracles.automorphisms(Graph.empty(11))


def test_is_distinguishing():
    g = cycle(5)
    auts = oracles.automorphisms(g)
    assert oracles.is_distinguishing(g, [1, 2, 1, 2, 3], auts)
    assert oracles.is_distinguishing(g, [1, 2, 3, 4, 5], auts)
    assert not oracles.is_distinguishing(g, [1] * 5, auts)
    assert not oracles.is_distinguishing(g, [1, 2, 1, 2, 1], auts)


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_graph_values(n):
    g = Graph.complete(n)
    assert oracles.distinguishing_number(g) == n
    assert oracles.distinguishing_chromatic_number(g) == n


def test_distinguishing_examples():
    assert oracles.distinguishing_number(cycle(5)) == 3
    assert oracles.distinguishing_chromatic_number(cycle(5)) == 3
    assert oracles.distinguishing_chromatic_number(complete_multipartite((2, 2))) == 4
    assert oracles.distinguishing_chromatic_number(clique_plus_independent(3)) == 3
    assert oracles.distinguishing_number(pendant_clique_example(), max_n=11) == 3


def test_degenerate_conventions():
    assert oracles.distinguishing_number(Graph.empty(0)) == 0
    assert oracles.distinguishing_chromatic_number(Graph.empty(0)) == 0
    # asymmetric graph: one color suffices
    g = Graph.from_edges(6, [(0, 5), (1, 4), (2, 3), (2, 5), (3, 4), (3, 5)])
    assert len(oracles.automorphisms(g)) == 1
    assert oracles.distinguishing_number(g) == 1


def test_distinguishing_coloring_certificate():
    g = complete_multipartite((3, 2))
    auts = oracles.automorphisms(g)
    col = oracles.distinguishing_coloring(g, auts, proper=True)
    assert max(col) == 5
    assert oracles.is_proper(g, col) and oracles.is_distinguishing(g, col, auts)


def test_distinguishing_colorings_enumeration():
    g = Graph.complete(2)
    found = oracles.distinguishing_colorings(g, None, 2, proper=False)
    assert [list(c) for c in found] == [[1, 2]]


def test_color_critical():
    assert all(oracles.is_color_critical(Graph.complete(4), v) for v in range(4))
    g = disjoint_union(Graph.complete(3), Graph.empty(1))
    assert not oracles.is_color_critical(g, 3)
    assert all(oracles.is_color_critical(cycle(5), v) for v in range(5))


def test_restrict_to_subset():
    g = complete_multipartite((3, 1, 1))
    act = oracles.automorphisms(g).restrict_to([0, 1, 2])
    assert act.n == 3
    assert len(act) == 6


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_complement_has_same_automorphisms(g):
    assert oracles.automorphisms(g).as_set() == oracles.automorphisms(complement(g)).as_set()


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_nordhaus_gaddum_bounds(g):
    n = g.n
    c, cb = oracles.chromatic_number(g), oracles.chromatic_number(complement(g))
    assert c + cb <= n + 1
    assert c * cb >= n
    assert 4 * c * cb <= (n + 1) ** 2


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_chi_at_most_chi_d_and_d_at_most_chi_d(g):
    auts = oracles.automorphisms(g)
    chi_d = oracles.distinguishing_chromatic_number(g, auts)
    assert oracles.chromatic_number(g) <= chi_d
    assert oracles.distinguishing_number(g, auts) <= chi_d


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_orbit_count_lower_bound(g):
    # distinct automorphisms must map a distinguishing coloring to distinct colorings
    auts = oracles.automorphisms(g)
    d = oracles.distinguishing_number(g, auts)
    if g.n:
        assert d ** g.n >= len(auts)
