import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from structroute.codec import (Codebook, ReconstructionError, Sampler, ScheduleError, Source,
                               SplitMix64, build_schedule, codebook_bound_holds, entropy_bits,
                               huffman_codebook, simulate)
from structroute.corpus import build
from structroute.flows import MultiFlow, sequential_construct, solve_mcf

seeds = st.integers(min_value=0, max_value=10_000)


def lengths(book):
    return [len(book.code[s]) for s in sorted(book.code)]


def random_dist(rnd, k):
    w = [rnd.randint(1, 50) for _ in range(k)]
    return {s: F(x, sum(w)) for s, x in enumerate(w)}


class TestHuffman:
    def test_uniform_four(self):
        assert lengths(huffman_codebook({s: F(1, 4) for s in "abcd"})) == [2, 2, 2, 2]

    def test_dyadic(self):
        book = huffman_codebook({"a": F(1, 2), "b": F(1, 4), "c": F(1, 4)})
        assert lengths(book) == [1, 2, 2]
        assert book.expected_length == F(3, 2) == F(book.entropy).limit_denominator(100)

    def test_two_symbols(self):
        book = huffman_codebook({"x": F(9, 10), "y": F(1, 10)})
        assert lengths(book) == [1, 1]
        assert book.expected_length == 1

    def test_single_symbol(self):
        book = huffman_codebook({"z": F(1)})
        assert book.code == {"z": "0"} and book.decode_prefix("0") == ("z", 1)

    def test_rejects_bad_distributions(self):
        for dist in ({}, {"a": F(1, 2)}, {"a": F(1), "b": F(0)}):
            with pytest.raises(ValueError):
                huffman_codebook(dist)

    def test_deterministic(self):
        # ties follow the mapping's order, so equal inputs give equal codes
        d = {s: F(1, 6) for s in range(6)}
        assert huffman_codebook(d).code == huffman_codebook(dict(d)).code
        assert lengths(huffman_codebook(d)) == [3, 3, 3, 3, 2, 2]

    @given(seeds)
    def test_properties(self, seed):
        rnd = random.Random(seed)
        dist = random_dist(rnd, rnd.randint(2, 12))
        book = huffman_codebook(dist)
        assert book.is_prefix_free()
        assert book.kraft_sum() == 1
        H = entropy_bits(dist.values())
        assert H - 1e-12 <= float(book.expected_length) <= H + 1
        for s in dist:
            assert book.decode_prefix(book.encode(s) + "1011") == (s, len(book.encode(s)))

    def test_decode_errors(self):
        book = huffman_codebook({"a": F(1, 2), "b": F(1, 4), "c": F(1, 4)})
        with pytest.raises(ValueError):
            book.decode_prefix("1")

    def test_block_bound(self):
        src = Source(("a", "b"), (F(3, 4), F(1, 4)))
        for k in range(1, 6):
            book = huffman_codebook(src.block_distribution(k))
            assert codebook_bound_holds(book, k, src.entropy)


class TestPrng:
    def test_reference_vectors(self):
        r = SplitMix64(1234567)
        assert [r.next_u64() for _ in range(5)] == [
            6457827717110365317, 3203168211198807973, 9817491932198370423,
            4593380528125082431, 16408922859458223821]
        assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF

    def test_randbelow_range_and_reproducible(self):
        a, b = SplitMix64(9), SplitMix64(9)
        xs = [a.randbelow(7) for _ in range(500)]
        assert xs == [b.randbelow(7) for _ in range(500)]
        assert set(xs) == set(range(7))
        with pytest.raises(ValueError):
            a.randbelow(0)

    def test_sampler_frequencies(self):
        s, rng = Sampler([F(1, 2), F(1, 3), F(1, 6)]), SplitMix64(5)
        n = 30_000
        counts = [0, 0, 0]
        for _ in range(n):
            counts[s.draw(rng)] += 1
        for c, p in zip(counts, (1 / 2, 1 / 3, 1 / 6)):
            assert abs(c / n - p) < 4 * math.sqrt(p * (1 - p) / n)


class TestSource:
    def test_uniform_for_rate(self):
        s = Source.uniform_for_rate(F(3, 4))
        assert len(s.alphabet) == 8 and s.period == 4
        assert s.rate == pytest.approx(0.75)

    def test_validation(self):
        with pytest.raises(ValueError):
            Source(("a", "b"), (F(1, 2),))
        with pytest.raises(ValueError):
            Source(("a", "a"), (F(1, 2), F(1, 2)))
        with pytest.raises(ValueError):
            Source(("a",), (F(1),), period=0)
        with pytest.raises(ValueError):
            Source.uniform_for_rate(0)


def line_setup(cap=2):
    net, _ = build("line", {"k": "3"})
    caps = {"e0": F(cap), "e1": F(cap)}
    return net, caps, sequential_construct(net, [1], caps).flow


class TestSchedule:
    def test_auto_block_length(self):
        net, caps, flow = line_setup()
        sched = build_schedule(net, flow, [Source.uniform_for_rate(1)], capacities=caps)
        assert sched.m == 2
        assert sched.guaranteed_rate("e0") <= caps["e0"]

    def test_no_slack(self):
        net, caps, flow = line_setup(cap=1)
        with pytest.raises(ScheduleError, match="insufficient slack on e0"):
            build_schedule(net, flow, [Source.uniform_for_rate(1)], capacities=caps)

    def test_source_too_fast(self):
        net, caps, flow = line_setup()
        with pytest.raises(ScheduleError, match="exceeds routed rate"):
            build_schedule(net, flow, [Source.uniform_for_rate(2)], capacities=caps)

    def test_m_must_respect_period(self):
        net, caps, flow = line_setup()
        with pytest.raises(ScheduleError, match="multiple of 2"):
            build_schedule(net, flow, [Source.uniform_for_rate(F(1, 2))], m=3, capacities=caps)

    def test_alphabet_limit(self):
        net, caps, flow = line_setup()
        with pytest.raises(ScheduleError, match="block alphabet"):
            build_schedule(net, flow, [Source.uniform_for_rate(1)], m=20, capacities=caps)

    def test_source_count(self):
        net, caps, flow = line_setup()
        with pytest.raises(ScheduleError, match="expected 1 sources"):
            build_schedule(net, flow, [], capacities=caps)

    def test_empty_flow(self):
        net, caps, _ = line_setup()
        with pytest.raises(Exception):
            build_schedule(net, MultiFlow(1), [Source.uniform_for_rate(1)], capacities=caps)

    def test_sub_blocks_cover_code(self):
        net, _ = build("fig5")
        caps = {"alpha": F(3, 4), "beta": F(7, 4), "gamma": F(3, 4), "epsilon": F(5, 4)}
        res = solve_mcf(net, [F(1, 2), F(1, 2)], caps, strict=True)
        sched = build_schedule(net, res.flow, [Source.uniform_for_rate(F(1, 2))] * 2,
                               m=4, capacities=caps)
        for i in (1, 2):
            for total in range(0, 12):
                parts = sched.sub_block_lengths(i, total)
                assert total <= sum(parts) <= total + len(parts)


GOLDEN = """\
m=6
blocks=5
seed=1
causal=true
pair.1.reconstructed=true
pair.1.delay=5
pair.1.source_rate=0.811278
pair.1.code_rate={cr}
"""


class TestSimulate:
    def test_single_path(self):
        net, caps, flow = line_setup()
        sched = build_schedule(net, flow, [Source.uniform_for_rate(1)], capacities=caps)
        rep = simulate(sched, 10, seed=3)
        assert rep.ok and rep.reconstructed == {1: True} and rep.delay == {1: 1}
        assert rep.arcs["e0"].bits_per_step == 1.0 and rep.arcs["e0"].sigma == 0.0

    def test_non_uniform_source(self):
        net, caps, flow = line_setup()
        src = Source(("a", "b"), (F(3, 4), F(1, 4)))
        sched = build_schedule(net, flow, [src], m=6, capacities=caps)
        rep = simulate(sched, 2000, seed=1)
        assert rep.ok
        expected = float(sched.codebooks[1].expected_length) / 6
        assert abs(rep.code_rate[1] - expected) <= 4 * rep.arcs["e0"].sigma
        assert rep.source_rate[1] <= rep.code_rate[1] + 4 * rep.arcs["e0"].sigma

    def test_reproducible_text(self):
        net, caps, flow = line_setup()
        src = Source(("a", "b"), (F(3, 4), F(1, 4)))
        sched = build_schedule(net, flow, [src], m=6, capacities=caps)
        a = simulate(sched, 5, seed=1).to_text()
        assert a == simulate(sched, 5, seed=1).to_text()
        assert a.startswith(GOLDEN.format(cr="0.866667"))
        assert a.endswith("ok=true\n")

    def test_butterfly_half_rates(self):
        net, _ = build("butterfly")
        res = solve_mcf(net, [F(1, 2), F(1, 2)])
        sched = build_schedule(net, res.flow, [Source.uniform_for_rate(F(1, 2))] * 2, m=8)
        rep = simulate(sched, 200, seed=0)
        assert rep.ok and rep.arcs["alpha"].bits_per_step == 1.0

    def test_fig6(self):
        net, _ = build("fig6")
        caps = {"beta": F(2), "epsilon": F(2), "gamma": F(2), "phi": F(2), "rho": F(2)}
        res = solve_mcf(net, [F(1), F(1)], caps, strict=True)
        sched = build_schedule(net, res.flow, [Source.uniform_for_rate(1)] * 2,
                               capacities=caps)
        rep = simulate(sched, 100, seed=2)
        assert rep.ok and all(s.near_flow for s in rep.arcs.values())

    def test_blocks_positive(self):
        net, caps, flow = line_setup()
        sched = build_schedule(net, flow, [Source.uniform_for_rate(1)], capacities=caps)
        with pytest.raises(ValueError):
            simulate(sched, 0)

    def test_corrupted_codebook_detected(self):
        net, caps, flow = line_setup()
        sched = build_schedule(net, flow, [Source.uniform_for_rate(1)], capacities=caps)
        code = dict(sched.codebooks[1].code)
        k0, k1 = sorted(code)[:2]
        code[k0], code[k1] = code[k1], code[k0]
        bad = Codebook(code, sched.codebooks[1].probs)
        bad.__dict__["_inverse"] = {v: k for k, v in sched.codebooks[1].code.items()}
        sched.codebooks[1] = bad
        with pytest.raises(ReconstructionError):
            simulate(sched, 50)


class TestContractExamples:
    def test_fig5_schedule_with_quarter_slack(self):
        net, _ = build("fig5")
        flow = MultiFlow(2)
        flow.set_commodity(1, {"out1": F(1), "beta": F(1), "epsilon": F(1), "in1": F(1)})
        flow.set_commodity(2, {"out2": F(1), "alpha": F(1, 2), "beta": F(1, 2),
                               "gamma": F(1, 2), "in2": F(1)})
        quarter = F(1, 4)
        caps = {a: flow.total(a) + quarter for a in ("alpha", "beta", "gamma", "epsilon")}
        sched = build_schedule(net, flow, [Source.uniform_for_rate(1)] * 2, capacities=caps)
        assert sched.m >= 8
        assert sorted(r.rate for r in sched.routes[2]) == [F(1, 2), F(1, 2)]
        for a, c in caps.items():
            assert sched.guaranteed_rate(a) <= c

    def test_single_path_any_block_length(self):
        net, caps, flow = line_setup()
        for m in (1, 2, 3):
            sched = build_schedule(net, flow, [Source.uniform_for_rate(1)], m=m, capacities=caps)
            assert [r.rate for r in sched.routes[1]] == [1]
            rep = simulate(sched, 10)
            assert rep.ok and rep.delay[1] == m - 1

    def test_cycle_flow_dropped(self):
        net, _ = build("fig6")
        caps = {a: F(3) for a in ("beta", "epsilon", "gamma", "phi", "rho")}
        base = solve_mcf(net, [F(1), F(1)], caps).flow
        looped = MultiFlow(2, dict(base.values))
        looped.values["beta", 2] = base.get("beta", 2) + 1
        looped.values["rho", 2] = base.get("rho", 2) + 1
        src = [Source.uniform_for_rate(1)] * 2
        a = build_schedule(net, base, src, m=2, capacities=caps)
        b = build_schedule(net, looped, src, m=2, capacities=caps)
        assert a.routes == b.routes
