import pytest
from hypothesis import given, settings

from anticycle.graph import (
    Graph,
    GraphInputError,
    Multigraph,
    anticomplete,
    canonical_cycle,
    canonical_path,
    components,
    delete_vertices,
    find_cycle,
    induced_subgraph,
    is_cycle,
    is_forest,
    is_induced_cycle,
    is_induced_path,
    is_stable,
    shortest_cycle,
)
from strategies import graphs

C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def test_anticomplete_examples():
    assert not anticomplete(Graph(2, [(0, 1)]), [0], [1])
    assert anticomplete(Graph(2), [0], [1])
    assert anticomplete(Graph(3, [(0, 1), (1, 2)]), [0], [2])
    assert not anticomplete(Graph(3), [0, 1], [1])


def test_anticomplete_out_of_range():
    with pytest.raises(GraphInputError):
        anticomplete(Graph(2), [0], [5])


def test_is_forest_examples():
    assert not is_forest(Graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert is_forest(Graph(5, [(i, i + 1) for i in range(4)]))
    assert is_forest(Graph(0))


def test_components_examples():
    assert sorted(map(len, components(Graph(4, [(0, 1), (2, 3)])))) == [2, 2]
    assert len(components(Graph(4, [(0, 1), (1, 2), (2, 3)]))) == 1
    assert components(Graph(3)) == [[0], [1], [2]]


def test_induced_subgraph_examples():
    h, idx = induced_subgraph(C4, [0, 1, 2])
    assert h.n == 3 and h.m == 2 and is_forest(h)
    h, idx = induced_subgraph(C4, range(4))
    assert h == C4 and idx == {i: i for i in range(4)}
    assert induced_subgraph(C4, [])[0].n == 0


def test_is_stable_examples():
    assert not is_stable(Graph(2, [(0, 1)]), [0, 1])
    assert is_stable(C4, [])
    assert is_stable(C4, [0, 2])


def test_graph_rejects_bad_input():
    for bad in ([(0, 0)], [(0, 1), (1, 0)], [(0, 3)]):
        with pytest.raises(GraphInputError):
            Graph(3, bad)
    with pytest.raises(GraphInputError):
        Graph(-1)


def test_multigraph_labels():
    h = Multigraph(2, [(0, 1), (1, 0), (1, 1)])
    assert [e[2] for e in h.edges] == [0, 1, 2]
    assert h.edge(1) == (0, 1)
    with pytest.raises(GraphInputError):
        Multigraph(2, [(0, 1, 7), (0, 1, 7)])


def test_cycle_and_path_predicates():
    assert is_cycle(C4, (0, 1, 2, 3)) and is_induced_cycle(C4, (0, 1, 2, 3))
    k4 = Graph(4, [(i, j) for j in range(4) for i in range(j)])
    assert is_cycle(k4, (0, 1, 2, 3)) and not is_induced_cycle(k4, (0, 1, 2, 3))
    assert is_induced_path(C4, (0, 1, 2)) and not is_induced_path(k4, (0, 1, 2))
    assert canonical_cycle((2, 1, 0, 3)) == (0, 1, 2, 3)
    assert canonical_path((3, 1, 0)) == (0, 1, 3)


@given(graphs(max_n=9))
def test_forest_edge_count_identity(g):
    assert is_forest(g) == (g.m == g.n - len(components(g)))
    assert (find_cycle(g) is None) == is_forest(g)


@given(graphs(max_n=9))
def test_cycles_found_are_cycles(g):
    c = find_cycle(g)
    if c is not None:
        assert is_cycle(g, c)
        short = shortest_cycle(g)
        assert is_induced_cycle(g, short) and len(short) <= len(c)


@given(graphs(max_n=8))
def test_anticomplete_symmetric(g):
    x = list(range(0, g.n, 3))
    y = list(range(1, g.n, 3))
    assert anticomplete(g, x, y) == anticomplete(g, y, x)


@given(graphs(max_n=8))
@settings(max_examples=50)
def test_induced_subgraph_composes(g):
    s1 = [v for v in range(g.n) if v % 3 != 0]
    s2 = [v for v in range(g.n) if v % 2 == 0]
    h1, m1 = induced_subgraph(g, s1)
    h12, m12 = induced_subgraph(h1, [m1[v] for v in s1 if v in s2])
    direct, md = induced_subgraph(g, [v for v in s1 if v in s2])
    assert h12 == direct


@given(graphs(max_n=8))
def test_delete_vertices_matches_induced(g):
    gone = list(range(0, g.n, 2))
    h, keep = delete_vertices(g, gone)
    h2, _ = induced_subgraph(g, keep)
    assert h == h2
