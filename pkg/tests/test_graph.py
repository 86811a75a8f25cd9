import itertools

import pytest
from hypothesis import given, strategies as st

from helpers import random_network
from structroute.corpus import build
from structroute.graph import (INF, StructureError, boundary_arcs, bundle, enumerate_i_paths,
                               reachable, structure_violations, validate_structure)

seeds = st.integers(min_value=0, max_value=10_000)


@pytest.fixture(scope="module")
def butterfly():
    return build("butterfly")[0]


@pytest.fixture(scope="module")
def fig5():
    return build("fig5")[0]


@pytest.fixture(scope="module")
def fig6():
    return build("fig6")[0]


def _two_pair(extra_arcs=None, caps=None):
    arcs = {"out1": ("s1", "x"), "out2": ("s2", "y"), "in1": ("x", "t1"),
            "in2": ("y", "t2"), "xy": ("x", "y")}
    arcs.update(extra_arcs or {})
    c = {a: INF for a in arcs}
    c.update(caps or {})
    return ["s1", "s2", "x", "y", "t1", "t2"], arcs, c, [("s1", "t1"), ("s2", "t2")]


class TestValidate:
    def test_butterfly_shape(self, butterfly):
        assert len(butterfly.vertices) == 10
        assert len(butterfly.arcs) == 11
        assert butterfly.n == 2

    def test_source_with_in_arc(self):
        args = _two_pair({"bad": ("s1", "s2")})
        problems = structure_violations(*args)
        assert any(p.startswith("source has in-arc") for p in problems)

    def test_disconnected(self):
        vertices = ["s1", "x", "t1", "s2", "y", "t2"]
        arcs = {"out1": ("s1", "x"), "in1": ("x", "t1"), "out2": ("s2", "y"), "in2": ("y", "t2")}
        caps = {a: INF for a in arcs}
        problems = structure_violations(vertices, arcs, caps, [("s1", "t1"), ("s2", "t2")])
        assert any(p.startswith("not connected") for p in problems)

    def test_self_loop_and_duplicate(self):
        v, arcs, caps, pairs = _two_pair({"loop": ("x", "x"), "dup": ("x", "y")}, {"loop": 1, "dup": 1})
        problems = structure_violations(v, arcs, caps, pairs)
        assert any(p.startswith("self-loop") for p in problems)
        assert any(p.startswith("duplicate arc") for p in problems)

    def test_antiparallel_allowed(self):
        v, arcs, caps, pairs = _two_pair({"yx": ("y", "x")}, {"yx": 1})
        assert validate_structure(v, arcs, caps, pairs).n == 2

    def test_capacity_must_be_positive(self):
        v, arcs, caps, pairs = _two_pair(caps={"xy": 0})
        with pytest.raises(StructureError) as exc:
            validate_structure(v, arcs, caps, pairs)
        assert any(p.startswith("capacity must be positive") for p in exc.value.violations)

    def test_finite_source_arc(self):
        v, arcs, caps, pairs = _two_pair(caps={"out1": 3})
        assert any(p.startswith("source arc must be infinite")
                   for p in structure_violations(v, arcs, caps, pairs))

    def test_unreachable_sink(self):
        v, arcs, caps, pairs = _two_pair()
        pairs = [("s2", "t1"), ("s1", "t2")]
        assert any(p.startswith("sink unreachable") for p in structure_violations(v, arcs, caps, pairs))

    def test_every_violation_reported(self):
        v, arcs, caps, pairs = _two_pair({"bad": ("s1", "s2")}, {"out1": 2})
        problems = structure_violations(v, arcs, caps, pairs)
        assert len(problems) >= 2


class TestReachable:
    def test_examples(self, butterfly):
        assert reachable(butterfly, "a", "tau2")
        assert not reachable(butterfly, "a", "tau2", {"alpha"})
        for v in butterfly.vertices:
            assert reachable(butterfly, v, v)

    def test_arc_endpoints(self, butterfly):
        # reaching an arc means reaching its tail
        assert reachable(butterfly, "sigma1", "alpha", {"alpha"})
        assert reachable(butterfly, "delta", "beta")
        assert not reachable(butterfly, "beta", "gamma")

    def test_unknown_id(self, butterfly):
        with pytest.raises(KeyError):
            reachable(butterfly, "nowhere", "a")

    @given(seeds)
    def test_monotone_and_transitive(self, seed):
        net = random_network(seed)
        arcs = list(net.arc_ids)
        small = set(arcs[::3])
        big = small | set(arcs[1::3])
        for u, v in itertools.product(net.vertices[:5], repeat=2):
            if reachable(net, u, v, big):
                assert reachable(net, u, v, small)
            if reachable(net, u, v):
                assert bool(net.paths_between(u, v))
        for u, v, w in itertools.product(net.vertices[:4], repeat=3):
            if reachable(net, u, v) and reachable(net, v, w):
                assert reachable(net, u, w)


class TestPaths:
    def test_butterfly_unique_paths(self, butterfly):
        (p1,) = enumerate_i_paths(butterfly, 1)
        assert p1.arcs == ("out1", "delta", "alpha", "beta", "in1")
        (p2,) = enumerate_i_paths(butterfly, 2)
        assert p2.arcs == ("out2", "phi", "alpha", "gamma", "in2")

    def test_fig5_two_paths(self, fig5):
        internal = [p.arcs[1:-1] for p in enumerate_i_paths(fig5, 2)]
        assert internal == [("alpha", "beta"), ("gamma",)]

    def test_fig6_one_path(self, fig6):
        (p,) = enumerate_i_paths(fig6, 1)
        assert p.arcs[1:-1] == ("epsilon", "beta")

    def test_bad_index(self, butterfly):
        with pytest.raises(IndexError):
            enumerate_i_paths(butterfly, 3)

    @given(seeds)
    def test_paths_are_simple_chains(self, seed):
        net = random_network(seed)
        for i in range(1, net.n + 1):
            paths = enumerate_i_paths(net, i)
            assert paths
            assert [p.arcs for p in paths] == sorted(p.arcs for p in paths)
            for p in paths:
                assert len(set(p.vertices)) == len(p.vertices)
                assert p.start == net.source(i) and p.end == net.sink(i)
                for k, a in enumerate(p.arcs):
                    assert net.arcs[a] == (p.vertices[k], p.vertices[k + 1])


class TestBundle:
    def test_examples(self, butterfly, fig6):
        assert bundle(butterfly, [2]).arcs == {"out2", "phi", "alpha", "gamma", "in2"}
        b1 = bundle(fig6, [1])
        assert {"epsilon", "beta"} <= b1.arcs and not {"phi", "gamma"} & b1.arcs
        empty = bundle(fig6, [])
        assert not empty.arcs and not empty.vertices

    @given(seeds)
    def test_union(self, seed):
        net = random_network(seed)
        idx = range(1, net.n + 1)
        for J1 in itertools.chain.from_iterable(itertools.combinations(idx, r) for r in range(net.n + 1)):
            for J2 in itertools.combinations(idx, 1):
                whole = bundle(net, set(J1) | set(J2))
                assert whole.arcs == bundle(net, J1).arcs | bundle(net, J2).arcs
                assert whole.vertices == bundle(net, J1).vertices | bundle(net, J2).vertices

    @given(seeds)
    def test_subgraph_invariants(self, seed):
        net = random_network(seed)
        b = bundle(net, range(1, net.n + 1))
        for a in b.arcs:
            assert set(net.arcs[a]) <= b.vertices


class TestBoundary:
    def test_examples(self, butterfly, fig5):
        U = {"sigma2", "s2", "a"}
        assert boundary_arcs(butterfly, U) == {"alpha", "chi"}
        assert boundary_arcs(butterfly, U) & bundle(butterfly, [2]).arcs == {"alpha"}
        assert boundary_arcs(butterfly, butterfly.vertices) == frozenset()
        assert boundary_arcs(fig5, {"sigma2", "b"}) & bundle(fig5, [2]).arcs == {"alpha", "gamma"}

    def test_bad_direction(self, butterfly):
        with pytest.raises(ValueError):
            boundary_arcs(butterfly, {"a"}, "sideways")

    @given(seeds, st.randoms(use_true_random=False))
    def test_out_equals_complement_in(self, seed, rnd):
        net = random_network(seed)
        U = {v for v in net.vertices if rnd.random() < 0.5}
        rest = set(net.vertices) - U
        assert boundary_arcs(net, U, "out") == boundary_arcs(net, rest, "in")
