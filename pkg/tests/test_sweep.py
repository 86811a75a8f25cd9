import random

from structroute.corpus import build
from structroute.netfile import emit_network
from structroute.routability import check_lemma_4_3
from structroute.sweep import PlacementSweep, core_of, place


def test_place_matches_corpus():
    net, demands = build("cycle", ["k=5", "pairs=0:3,2:1"])
    again = place(core_of(net), [("v0", "v3"), ("v2", "v1")])
    assert emit_network(again, demands) == emit_network(net, demands)


def test_attachments_are_reachable_pairs():
    net, _ = build("line", ["k=3"])
    sw = PlacementSweep(core_of(net))
    assert set(sw.attachments) == {("v0", "v0"), ("v0", "v1"), ("v0", "v2"), ("v1", "v1"),
                                   ("v1", "v2"), ("v2", "v2")}


def test_tree_sweep_certifies():
    net, _ = build("tree")
    res = PlacementSweep(core_of(net)).run(max_pairs=2)
    assert res.ok and res.instances > 0


def test_butterfly_has_counterexamples():
    net, _ = build("butterfly")
    res = PlacementSweep(core_of(net)).run(max_pairs=2)
    assert not res.ok
    assert (("s1", "t1"), ("s2", "t2")) in res.counterexamples


def test_agrees_with_direct_check():
    rnd = random.Random(4)
    for name in ("butterfly", "fig5", "fig6", "cycle"):
        net, _ = build(name)
        core = core_of(net)
        sw = PlacementSweep(core)
        for _ in range(60):
            P = tuple(rnd.choice(sw.attachments) for _ in range(rnd.randint(1, 3)))
            assert sw.certified(P) == check_lemma_4_3(place(core, P)).holds, (name, P)
