import pytest
from hypothesis import given
from hypothesis import strategies as st

from eqforest.generators import complete, cycle, path, sharpness_example, star
from eqforest.graph import (INFINITE, Graph, GraphError, bfs_distance, connected_components,
                            degeneracy, degeneracy_order, edges_between, girth, induced_subgraph,
                            is_forest, max_degree, min_degree)

from conftest import graphs
from oracles import nx_girth, nx_graph


def test_rejects_loops_duplicates_and_range():
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(-1)


def test_edges_are_normalized_and_sorted():
    g = Graph(4, [(3, 1), (2, 0)])
    assert g.edges == ((0, 2), (1, 3))
    assert g == Graph(4, [(0, 2), (1, 3)]) and hash(g) == hash(Graph(4, [(1, 3), (0, 2)]))


@pytest.mark.parametrize("graph, expected", [
    (cycle(5), 5), (path(6), INFINITE), (star(4), INFINITE), (complete(4), 3),
    (Graph(0), INFINITE), (Graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 4)]), 3),
])
def test_girth(graph, expected):
    assert girth(graph) == expected


@pytest.mark.parametrize("graph, expected", [
    (complete(4), (3, 3)), (star(5), (1, 5)), (cycle(6), (2, 2)),
])
def test_min_max_degree(graph, expected):
    assert (min_degree(graph), max_degree(graph)) == expected


def test_degree_of_empty_graph_is_an_error():
    with pytest.raises(GraphError):
        min_degree(Graph(0))
    with pytest.raises(GraphError):
        max_degree(Graph(0))


def test_edges_between():
    c4 = cycle(4)
    assert edges_between(complete(4), {0, 1}, {2, 3}) == 4
    assert edges_between(c4, {0}, {2}) == 0
    assert edges_between(c4, {0}, {1, 3}) == 2
    with pytest.raises(GraphError):
        edges_between(c4, {0, 1}, {1, 2})


def test_induced_subgraph():
    sub = induced_subgraph(complete(4), {0, 1, 2})
    assert sub.graph == complete(3) and sub.vertices == (0, 1, 2)
    assert induced_subgraph(cycle(5), set()).graph == Graph(0)
    p3 = induced_subgraph(cycle(5), {4, 0, 1})
    assert p3.graph.num_edges == 2 and girth(p3.graph) == INFINITE
    assert sorted(p3.graph.degree(v) for v in p3.graph.vertices()) == [1, 1, 2]
    with pytest.raises(GraphError):
        induced_subgraph(cycle(5), {7})


def test_is_forest():
    assert is_forest(path(5))
    assert not is_forest(cycle(3))
    assert is_forest(Graph(0))


def test_degeneracy():
    assert degeneracy(path(7)) == 1
    assert degeneracy(star(6)) == 1
    assert degeneracy(complete(5)) == 4
    assert degeneracy(sharpness_example(3, 3)) == 3
    order = degeneracy_order(star(3))
    assert sorted(order) == [0, 1, 2, 3] and order[0] == 1


def test_bfs_distance():
    p = path(6)
    assert bfs_distance(p, 0, 5) == 5
    assert bfs_distance(p, 0, 5, limit=3) == INFINITE
    assert bfs_distance(Graph(2), 0, 1) == INFINITE
    assert bfs_distance(p, 2, 2) == 0


@given(graphs(max_n=10))
def test_girth_matches_networkx(g):
    assert girth(g) == nx_girth(g.n, g.edges)


@given(graphs(max_n=10), st.data())
def test_induced_subgraph_never_shortens_girth(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    assert girth(induced_subgraph(g, s).graph) >= girth(g)


@given(graphs(max_n=10))
def test_forest_iff_infinite_girth(g):
    assert is_forest(g) == (girth(g) == INFINITE)
    assert is_forest(g) == (g.num_edges == g.n - len(connected_components(g)))


@given(graphs(max_n=10))
def test_handshake(g):
    assert sum(g.degree(v) for v in g.vertices()) == 2 * g.num_edges


@given(graphs(min_n=1, max_n=10), st.data())
def test_cut_plus_sides_equals_edges(g, data):
    s = data.draw(st.sets(st.integers(0, g.n - 1)))
    t = set(g.vertices()) - s
    total = (edges_between(g, s, t) + induced_subgraph(g, s).graph.num_edges
             + induced_subgraph(g, t).graph.num_edges)
    assert total == g.num_edges


@given(graphs(min_n=1, max_n=10))
def test_degeneracy_bounds(g):
    import networkx as nx
    k = degeneracy(g)
    assert k <= max_degree(g)
    assert k == (max(nx.core_number(nx_graph(g.n, g.edges)).values()) if g.n else 0)
