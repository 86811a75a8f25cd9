import pytest

from structroute.corpus import DEFAULT_INSTANCES, GENERATORS, CorpusError, build, corpus
from structroute.cuts import enumerate_viable_i_cuts, outgoing_view
from structroute.dominance import sdom
from structroute.graph import enumerate_i_paths
from structroute.netfile import parse_network
from structroute.routability import analyze


def arc_paths(net, i):
    return {p.arcs[1:-1] for p in enumerate_i_paths(net, i)}


@pytest.mark.parametrize("name, params", DEFAULT_INSTANCES)
def test_defaults_parse_back(name, params):
    text = corpus(name, params)
    net, _, demands = parse_network(text)
    assert net.n == len(demands) >= 1


def test_every_generator_has_a_default():
    assert {name for name, _ in DEFAULT_INSTANCES} == set(GENERATORS)


def test_butterfly_facts():
    net, _ = build("butterfly")
    assert arc_paths(net, 1) == {("delta", "alpha", "beta")}
    assert arc_paths(net, 2) == {("phi", "alpha", "gamma")}
    assert sdom(net, {"alpha"}) == {"alpha", "beta", "gamma"}


def test_fig5_facts():
    net, _ = build("fig5")
    assert arc_paths(net, 1) == {("beta", "epsilon")}
    assert arc_paths(net, 2) == {("alpha", "beta"), ("gamma",)}


def test_fig6_facts():
    net, _ = build("fig6")
    assert arc_paths(net, 1) == {("epsilon", "beta")}
    assert arc_paths(net, 2) == {("phi",), ("beta", "gamma")}
    assert net.arcs["rho"] == ("v", "u") and net.arcs["beta"] == ("u", "v")
    view = {frozenset(O) for O in outgoing_view(enumerate_viable_i_cuts(net, 2))}
    assert view == {frozenset({"phi", "beta"}), frozenset({"phi", "gamma"})}
    assert analyze(net).certified_by == "l42"


def test_families():
    net, _ = build("line", ["k=5", "pairs=0:4,1:3"])
    assert net.n == 2 and net.arcs["out2"] == ("sigma2", "v1")
    net, _ = build("cycle", ["k=3"])
    assert len(net.arcs) == 5
    net, _ = build("tree")
    assert net.source(1) == "sigma1"
    net, _ = build("tree_of_cycles", ["cycles=3,3", "attach=0.1"])
    assert "c1v0" not in net.vertices and net.arcs["c1e0"][0] == "c0v1"


def test_overrides():
    net, demands = build("butterfly", ["cap=2", "sink_cap=3", "demands=1/2,1"])
    assert net.capacities["alpha"] == 2 and net.capacities["in1"] == 3
    assert demands == (0.5, 1)


@pytest.mark.parametrize("name, params, message", [
    ("nope", [], "unknown corpus instance"),
    ("line", ["k"], "key=value"),
    ("line", ["bogus=1"], "bad parameters"),
    ("line", ["pairs=0-1"], "pairs must look like"),
    ("line", ["k=3", "pairs=0:7"], "unknown attachment"),
    ("tree", ["arcs=0>1,1>2,2>0,3>4"], None),
    ("tree_of_cycles", ["cycles=3,1", "attach=0.1"], "at least 2"),
    ("tree_of_cycles", ["cycles=3,3", "attach=1.0"], "bad attachment"),
    ("butterfly", ["demands=1"], "one demand per pair"),
])
def test_bad_params(name, params, message):
    with pytest.raises(Exception) as exc:
        build(name, params)
    if message:
        assert isinstance(exc.value, CorpusError) and message in str(exc.value)
