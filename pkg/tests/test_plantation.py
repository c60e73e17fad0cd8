import itertools

import pytest
from hypothesis import given, settings

from anticycle.graph import Graph, GraphInputError, is_induced_cycle, mask_of
from anticycle.plantation import (
    NotCycleHitting,
    Transition,
    delete,
    explode,
    is_dyadic,
    is_monic,
    is_normal,
    is_selfless,
    make_plantation,
    multiplicity,
    normal_transition_set,
    normality_problems,
    self_transitions,
    thickness,
    transitions,
)
from strategies import monic_inputs, plantation_inputs


def cyc(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def brute_transitions(p):
    """Forest paths with >= 2 vertices, both ends in N, interior avoiding N."""
    f = p.forest
    nm = p.n_mask
    out = set()
    for a, b in itertools.combinations(sorted(p.frontier), 2):
        # the forest path between a and b, if any
        prev = {a: None}
        queue = [a]
        for v in queue:
            for w in sorted(f.adj[v]):
                if w not in prev:
                    prev[w] = v
                    queue.append(w)
        if b not in prev:
            continue
        path = [b]
        while path[-1] != a:
            path.append(prev[path[-1]])
        path.reverse()
        if any(nm >> v & 1 for v in path[1:-1]):
            continue
        feet = sorted(set(p.z_neighbours(a)) | set(p.z_neighbours(b)))
        out.add((tuple(path), tuple(feet)))
    return out


def test_make_plantation_examples():
    p = make_plantation(cyc(4), [0], 2)
    assert p.forest.m == 2 and p.frontier == {1, 3}
    g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    with pytest.raises(NotCycleHitting) as e:
        make_plantation(g, [0], 2)
    assert set(e.value.cycle) == {3, 4, 5}
    p = make_plantation(Graph(3, [(0, 1)]), [], 2)
    assert not p.z and not p.frontier
    with pytest.raises(GraphInputError):
        make_plantation(cyc(4), [0], 0)


def test_monic_examples():
    assert is_monic(make_plantation(cyc(4), [0], 2))
    assert not is_monic(make_plantation(cyc(4), [0, 2], 2))
    assert not is_monic(make_plantation(cyc(4), [0, 1], 2))


def test_dyadic_and_selfless_examples():
    p = make_plantation(cyc(4), [0], 2)
    assert is_monic(p) and is_dyadic(p)
    p5 = make_plantation(cyc(5), [0], 2)
    assert not is_selfless(p5)
    assert [t.path for t in self_transitions(p5)] == [(1, 2, 3, 4)]
    assert is_selfless(make_plantation(cyc(4), [0, 2], 2))


def test_explode_examples():
    q, trace = explode(make_plantation(cyc(4), [0], 2), 0)
    assert q.g.n == 1 and q.ids == (2,) and not q.z and trace.exploded == [0]
    g = Graph(4, [(1, 2), (2, 3)])
    q, _ = explode(make_plantation(g, [0], 2), 0)
    assert q.ids == (1, 2, 3)
    p = make_plantation(cyc(6), [0, 3], 2)
    q, _ = explode(p, 0)
    q, _ = explode(q, q.local([3])[0])
    assert not q.z and q.g.n == 0
    with pytest.raises(GraphInputError):
        explode(p, 1)


def test_delete_rejects_z():
    p = make_plantation(cyc(4), [0], 2)
    with pytest.raises(GraphInputError):
        delete(p, [0])
    q, trace = delete(p, [2])
    assert trace.deleted == [2] and q.ids == (0, 1, 3)


def test_transitions_examples():
    assert transitions(make_plantation(cyc(4), [0, 2], 2)) == []
    t = transitions(make_plantation(cyc(6), [0, 3], 2))
    assert [(x.path, x.feet) for x in t] == [((1, 2), (0, 3)), ((4, 5), (0, 3))]
    assert transitions(make_plantation(Graph(3, [(0, 1), (1, 2)]), [], 2)) == []


def test_multiplicity_examples():
    p = make_plantation(cyc(6), [0, 3], 2)
    assert multiplicity(p, 0, 3) == 2 and thickness(p) == 2
    # theta: z-vertices 0 and 1 joined by three forest paths
    theta = Graph(8, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)])
    p = make_plantation(theta, [0, 1], 2)
    assert multiplicity(p, 0, 1) == 3 and multiplicity(p, 0, 0) == 0
    assert thickness(make_plantation(cyc(4), [0, 2], 2)) == 0


def test_c6_single_transition_per_pair():
    # C6 with opposite z: the two transitions join the same pair of feet
    p = make_plantation(cyc(6), [0, 3], 2)
    assert {t.feet for t in transitions(p)} == {(0, 3)}


@given(plantation_inputs(max_n=10, max_z=3))
@settings(max_examples=150, deadline=None)
def test_transitions_match_oracle(inp):
    g, z = inp
    p = make_plantation(g, z, 2)
    got = {(t.path, t.feet) for t in transitions(p)}
    brute = {(min(pa, pa[::-1]), ft) for pa, ft in brute_transitions(p)}
    assert {(min(pa, pa[::-1]), ft) for pa, ft in got} == brute


@given(plantation_inputs(max_n=10, max_z=3))
@settings(max_examples=100, deadline=None)
def test_explode_conserves_transitions(inp):
    g, z = inp
    p = make_plantation(g, z, 2)
    before = {frozenset(t.path) for t in transitions(p)}
    for v in sorted(p.z):
        q, _ = explode(p, v)
        for t in transitions(q):
            assert frozenset(q.ids[x] for x in t.path) in before


def test_normal_set_examples():
    # path whose two ends see z
    g = Graph(5, [(0, 1), (1, 2), (0, 3), (2, 4)])
    p = make_plantation(g, [3, 4], 2)
    s = normal_transition_set(p)
    assert len(s) == 1 and 4 * len(s) >= len(p.frontier)
    # spider: centre 0, legs 1-2, 3-4, 5-6, 7-8, leg ends see z-vertex 9
    legs = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (0, 7), (7, 8)]
    g = Graph(10, legs + [(2, 9), (4, 9), (6, 9), (8, 9)])
    p = make_plantation(g, [9], 2)
    s = normal_transition_set(p)
    assert is_normal(p, s) and 4 * len(s) >= 4
    # three N-vertices in one component
    g = Graph(5, [(0, 1), (1, 2), (0, 3), (1, 3), (2, 4)])
    p = make_plantation(g, [3, 4], 2)
    assert len(normal_transition_set(p)) >= 1


def test_normal_set_rejects_lonely_component():
    g = Graph(4, [(0, 1), (1, 3), (2, 3)])
    p = make_plantation(g, [3], 2)
    with pytest.raises(GraphInputError):
        normal_transition_set(p)


def test_normality_problems_detected():
    theta = Graph(8, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)])
    p = make_plantation(theta, [0, 1], 2)
    t = transitions(p)
    assert is_normal(p, t)
    dup = [t[0], t[0]]
    assert normality_problems(p, dup)
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (3, 5)])
    p = make_plantation(g, [4, 5], 2)
    a = Transition((0, 1), (4,))
    b = Transition((1, 2, 3), (4, 5))
    assert not is_normal(p, [a, b]) or a.ends[1] == b.ends[0]


@given(monic_inputs(max_forest=12, max_z=3, attach=2))
@settings(max_examples=200, deadline=None)
def test_normal_set_properties(inp):
    g, z = inp
    p = make_plantation(g, z, 2)
    try:
        s = normal_transition_set(p)
    except GraphInputError:
        return
    assert is_normal(p, s)
    assert 4 * len(s) >= len(p.frontier)
    # every member owns an edge no other member uses
    for i, t in enumerate(s):
        others = set().union(*(u.edges() for j, u in enumerate(s) if j != i))
        assert t.edges() - others


@given(plantation_inputs(max_n=10, max_z=3))
@settings(deadline=None)
def test_self_transitions_span_cycles(inp):
    g, z = inp
    p = make_plantation(g, z, 2)
    for t in self_transitions(p):
        vs = set(t.path) | set(t.feet)
        assert len(vs) >= 3
        # path plus its single foot spans a cycle
        w = p.witness([vs])
        assert is_induced_cycle(g, w.cycles[0])
        assert mask_of(w.cycles[0]) & ~mask_of(vs) == 0
