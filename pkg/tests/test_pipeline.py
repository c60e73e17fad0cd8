from hypothesis import given, settings

from anticycle.graph import Graph
from anticycle.pipeline import boundary_size, run_pipeline
from anticycle.plantation import make_plantation
from anticycle.recognizer import is_sO_free
from builders import digons, linkages, self_loops, stars
from strategies import plantation_inputs


def test_stage_order_and_pass():
    c6 = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    rep = run_pipeline(c6, [0, 3], 2)
    names = [st.name for st in rep.stages]
    assert names == ["dyadic", "binary", "selfless", "thickness", "normal set", "cycle cover", "boundary", "covering bound"]
    assert rep.verdict == "PASS" and rep.covering.n == 2
    assert rep.to_dict()["verdict"] == "PASS"
    assert rep.to_text().splitlines()[-1] == "PASS"


def test_triangle_in_z_skips_boundary():
    g = Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    rep = run_pipeline(g, [0, 1, 2], 2)
    assert rep.stages[0].status == "COUNT-ZERO"
    assert [st.name for st in rep.stages] == ["dyadic", "covering bound"]
    assert rep.verdict == "PASS"


def test_covering_cap_skips_counts():
    g, z = linkages(1, copies=1, per=3)
    rep = run_pipeline(g, z, 2, covering_cap=boundary_size(make_plantation(g, z, 2)) - 1)
    assert rep.covering is None and not rep.stages[0].checks


def test_witness_stages():
    for builder, stage in [(digons, "binary"), (self_loops, "selfless"), (linkages, "thickness"), (stars, "thickness")]:
        g, z = builder(2)
        rep = run_pipeline(g, z, 2)
        assert rep.verdict == "WITNESS" and rep.witness.is_valid(g, 2)
        status = {st.name: st.status for st in rep.stages}
        assert status[stage] == "WITNESS"
        assert status["boundary"] == "SKIPPED"
        assert "covering bound" not in status


@given(plantation_inputs(max_n=11, max_z=3))
@settings(max_examples=150, deadline=None)
def test_free_inputs_pass(inp):
    g, z = inp
    for s in (2, 3):
        rep = run_pipeline(g, z, s)
        if rep.witness is not None:
            assert rep.witness.is_valid(g, s)
            assert not is_sO_free(g, s).free
        elif is_sO_free(g, s).free:
            assert rep.verdict == "PASS", rep.to_text()
