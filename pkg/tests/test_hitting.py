import pytest
from hypothesis import given, settings

from anticycle.bounds import PhiTableError
from anticycle.graph import CapExceeded, Graph, GraphInputError, Multigraph
from anticycle.hitting import (
    WalkCycle,
    apply_ep,
    feet_multigraph,
    find_disjoint_cycles,
    is_feedback_set,
    min_feedback_vertex_set,
    pack_or_cover,
)
from anticycle.plantation import Transition, make_plantation, normal_transition_set, transitions
from oracles import is_feedback, max_disjoint_multicycles, min_fvs_size
from strategies import monic_inputs, multigraphs


def test_two_digons_pack():
    h = Multigraph(4, [(0, 1), (0, 1), (2, 3), (2, 3)])
    res = pack_or_cover(h, 2)
    assert res.is_packing and len(res.packing) == 2
    assert not set(res.packing[0].vertices) & set(res.packing[1].vertices)


def test_triple_edge_cover():
    h = Multigraph(2, [(0, 1), (0, 1), (0, 1)])
    res = pack_or_cover(h, 2)
    assert not res.is_packing and res.cover == {0}
    assert min_fvs_size(h) == 1


def test_forest_cover_empty():
    h = Multigraph(5, [(0, 1), (1, 2), (1, 3)])
    for s in (1, 2, 3):
        assert pack_or_cover(h, s).cover == frozenset()


def test_loop_is_a_cycle():
    h = Multigraph(3, [(1, 1), (0, 2)])
    assert pack_or_cover(h, 2).cover == {1}
    assert find_disjoint_cycles(h, 1) == (WalkCycle((1,), (0,)),)


def test_phi_table_too_small():
    # K5 has no two disjoint cycles but needs three vertices to hit every cycle
    k5 = Multigraph(5, [(i, j) for j in range(5) for i in range(j)])
    assert pack_or_cover(k5, 2).cover is not None
    with pytest.raises(PhiTableError):
        pack_or_cover(k5, 2, phi_table={2: 2})


def test_bad_s_and_node_cap():
    with pytest.raises(GraphInputError):
        pack_or_cover(Multigraph(1), 0)
    k6 = Multigraph(6, [(i, j) for j in range(6) for i in range(j)])
    with pytest.raises(CapExceeded):
        min_feedback_vertex_set(k6, max_nodes=1)


def test_walk_cycle_problems():
    h = Multigraph(3, [(0, 1), (1, 2), (0, 2)])
    assert not WalkCycle((0, 1, 2), (0, 1, 2)).problems(h)
    assert WalkCycle((0, 1, 2), (0, 0, 2)).problems(h)
    assert WalkCycle((0, 2, 1), (0, 1, 2)).problems(h)


@given(multigraphs(max_n=7, max_m=12))
@settings(max_examples=300, deadline=None)
def test_min_fvs_matches_brute_force(h):
    x = min_feedback_vertex_set(h)
    assert is_feedback(h, set(x)) and is_feedback_set(h, x)
    assert len(x) == min_fvs_size(h)


@given(multigraphs(max_n=7, max_m=12))
@settings(max_examples=200, deadline=None)
def test_pack_or_cover_contract(h):
    for s in (1, 2, 3):
        best = max_disjoint_multicycles(h, s)
        res = pack_or_cover(h, s)
        if res.is_packing:
            assert len(res.packing) == s and best >= s
            used = [set(c.vertices) for c in res.packing]
            for i in range(len(used)):
                assert not used[i] & set().union(*used[i + 1:])
                assert not res.packing[i].problems(h)
        else:
            assert best < s
            assert is_feedback(h, set(res.cover))
            assert len(res.cover) >= best


def test_feet_multigraph_examples():
    theta = Graph(6, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1)])
    p = make_plantation(theta, [0, 1], 2)
    h = feet_multigraph(p, transitions(p))
    assert sorted((u, v) for u, v, _ in h.edges) == [(0, 1), (0, 1)]
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    p = make_plantation(c4, [0], 2)
    h = feet_multigraph(p, transitions(p))
    assert [(u, v) for u, v, _ in h.edges] == [(0, 0)]
    assert feet_multigraph(p, []).edges == ()
    with pytest.raises(GraphInputError):
        feet_multigraph(p, [Transition((1, 2), ())])


def test_apply_ep_forest_multigraph():
    # a path of z-vertices 4 - 5 - 6 linked by single transitions
    g = Graph(7, [(0, 1), (2, 3), (0, 4), (1, 5), (2, 5), (3, 6)])
    p = make_plantation(g, [4, 5, 6], 2)
    s = normal_transition_set(p)
    res = apply_ep(p, s)
    assert res.x == frozenset() and len(res.uncovered) == len(s) <= len(p.z)


def gadget(k):
    """``k`` anticomplete copies of two z-vertices joined by two transitions."""
    edges = []
    z = []
    for c in range(k):
        b = 6 * c
        a, bb = b + 4, b + 5
        z += [a, bb]
        edges += [(b, b + 1), (b + 2, b + 3), (a, b), (a, b + 2), (bb, b + 1), (bb, b + 3)]
    return Graph(6 * k, edges), z


def test_apply_ep_digons_give_witness():
    g, z = gadget(2)
    p = make_plantation(g, z, 2)
    res = apply_ep(p, transitions(p))
    assert res.witness is not None and res.witness.is_valid(g, 2)


def test_apply_ep_loop_lifts_to_cycle():
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    p = make_plantation(c4, [0], 1)
    res = apply_ep(p, transitions(p))
    assert res.witness.cycles == ((0, 1, 2, 3),)


def test_apply_ep_rejects_non_normal():
    g, z = gadget(1)
    p = make_plantation(g, z, 2)
    t = transitions(p)
    with pytest.raises(GraphInputError):
        apply_ep(p, [t[0], t[0]])
    p = make_plantation(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), [0, 2], 2)
    with pytest.raises(GraphInputError):
        apply_ep(p, [])


@given(monic_inputs(max_forest=12, max_z=4, attach=1))
@settings(max_examples=200, deadline=None)
def test_apply_ep_contract(inp):
    g, z = inp
    p = make_plantation(g, z, 2)
    try:
        s = normal_transition_set(p)
    except GraphInputError:
        return
    res = apply_ep(p, s)
    if res.witness is not None:
        assert res.witness.is_valid(g, 2)
    else:
        assert len(res.x) <= 3 and len(res.uncovered) <= len(p.z)
