import pytest
from hypothesis import given, strategies as st

from nglab.graph import (
    Graph, Shape, classify_induced, complement, delete_vertex, disjoint_union, induced_subgraph, members,
)
from nglab.graph6 import emit_graph6, parse_graph6, read_graph6_lines, write_graph6_file, read_graph6_file
from nglab.errors import Graph6Error
from nglab.generators import cycle


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def test_complement_of_path():
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert list(complement(p3).edges()) == [(0, 2)]


def test_complement_of_complete_is_empty():
    assert complement(Graph.complete(4)).edge_count() == 0


def test_induced_subgraph_of_cycle():
    sub = induced_subgraph(cycle(5), [0, 1, 2])
    assert sub.n == 3 and list(sub.edges()) == [(0, 1), (1, 2)]


def test_induced_subgraph_out_of_range():
    with pytest.raises(ValueError):
        induced_subgraph(cycle(5), [0, 7])


def test_delete_vertex_and_union():
    assert delete_vertex(Graph.complete(4), 0) == Graph.complete(3)
    u = disjoint_union(Graph.complete(2), Graph.empty(1))
    assert u.n == 3 and list(u.edges()) == [(0, 1)]


def test_degrees_and_neighbors():
    g = cycle(5)
    assert list(g.degrees) == [2] * 5
    assert members(g.adj[0]) == [1, 4]
    assert g.max_degree() == 2


def test_invalid_edges_rejected():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


def test_shape_classification():
    assert classify_induced(Graph.complete(3), [0, 1, 2]) & Shape.CLIQUE
    assert classify_induced(Graph.empty(3), [0, 1, 2]) & Shape.INDEPENDENT
    assert classify_induced(cycle(5), range(5)) == Shape.FIVE_CYCLE
    assert classify_induced(cycle(6), range(6)) == Shape.OTHER
    # a single vertex is both a clique and an independent set
    assert classify_induced(Graph.empty(1), [0]) == Shape.CLIQUE | Shape.INDEPENDENT


def test_graph6_known_strings():
    assert parse_graph6("Bw") == Graph.complete(3)
    assert emit_graph6(Graph.empty(1)) == "@"
    assert emit_graph6(Graph.empty(0)) == "?"
    assert parse_graph6(">>graph6<<Bw") == Graph.complete(3)


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B!", "~??"])
def test_graph6_errors(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_graph6_large_header():
    g = Graph.from_edges(63, [(0, 62), (10, 11)])
    s = emit_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s) == g


def test_graph6_lines_and_file(tmp_path):
    gs = list(read_graph6_lines([">>graph6<<", "", "Bw", "@"]))
    assert gs == [Graph.complete(3), Graph.empty(1)]
    path = tmp_path / "g.g6"
    write_graph6_file(path, gs, header=True)
    assert read_graph6_file(path) == gs


@given(graphs())
def test_graph6_round_trip(g):
    assert parse_graph6(emit_graph6(g)) == g


@given(graphs())
def test_complement_involution(g):
    gbar = complement(g)
    assert complement(gbar) == g
    assert g.edge_count() + gbar.edge_count() == g.n * (g.n - 1) // 2


@given(graphs())
def test_key_round_trip(g):
    assert Graph.from_key(g.key(), g.n) == g
