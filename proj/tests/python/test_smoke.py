import json

import pytest

import cwgraph


def c6():
    return cwgraph.Graph.from_edges(
        6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]
    )


def test_graph_basics():
    g = c6()
    assert g.n == 6
    assert g.m == 6
    assert g.adjacent(0, 1)
    assert not g.adjacent(0, 2)
    text = cwgraph.write_graph(g)
    assert cwgraph.parse_graph(text) == g


def test_class_gate():
    assert cwgraph.is_in_class(c6()) is None
    assert cwgraph.find_c6(c6()) == [0, 1, 2, 3, 4, 5]
    c4 = cwgraph.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    pattern, witness = cwgraph.is_in_class(c4)
    assert pattern == "C4"
    assert witness == [0, 1, 2, 3]


def test_decompose_and_term():
    g = cwgraph.gen_instance("triangle-config", seed=3)
    report = cwgraph.decompose(g)
    assert len(report["partition"]["parts"]) == 26
    assert report["monotone"]
    assert all(v["pass"] for v in report["verdicts"])

    term = cwgraph.build_term(g)
    parsed = json.loads(term)
    assert parsed["budget"] == 27
    ok, width = cwgraph.verify_term(term, g)
    assert ok
    assert width <= 27


def test_rejection_raises():
    c4 = cwgraph.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    with pytest.raises(cwgraph.DecomposeError):
        cwgraph.decompose(c4)


def test_oracles():
    assert cwgraph.brute_cwd_exact(c6()) == 3
    chi, colours = cwgraph.chromatic_number(c6())
    assert chi == 2
    assert len(colours) == 6
    chi_dp, _ = cwgraph.chromatic_number(c6(), method="term-dp")
    assert chi_dp == 2


def test_generators():
    assert "triangle-config" in cwgraph.instance_presets()
    g = cwgraph.gen_random(30, 0.5, 42)
    assert g.m == 232
    assert cwgraph.gen_random(30, 0.5, 42) == g
