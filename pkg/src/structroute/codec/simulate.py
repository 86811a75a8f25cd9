"""Epoch-by-epoch simulation of a routing schedule."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import sqrt

from ..graph import is_inf
from .prng import Sampler, SplitMix64
from .schedule import RoutingSchedule


class ReconstructionError(AssertionError):
    pass


@dataclass(frozen=True)
class Frame:
    pair: int
    path: int
    length: int
    payload: str


@dataclass
class ArcStats:
    capacity: object
    flow: object               # assigned rate: sum of u over crossing paths
    sub_blocks: int            # sub-blocks crossing per epoch
    bits_per_step: float
    sigma: float               # standard error of bits_per_step
    margin: float              # (1 + sub_blocks)/m + 3 sigma

    @property
    def within(self) -> bool:
        return is_inf(self.capacity) or self.bits_per_step <= float(self.capacity) + self.margin

    @property
    def near_flow(self) -> bool:
        return abs(self.bits_per_step - float(self.flow)) <= self.margin


@dataclass
class SimReport:
    m: int
    blocks: int
    seed: int
    reconstructed: dict = field(default_factory=dict)   # pair -> bool
    delay: dict = field(default_factory=dict)           # pair -> steps
    source_rate: dict = field(default_factory=dict)     # pair -> bits/step
    code_rate: dict = field(default_factory=dict)       # pair -> empirical coded bits/step
    arcs: dict = field(default_factory=dict)            # arc -> ArcStats
    causal: bool = True

    @property
    def ok(self) -> bool:
        return (self.causal and all(self.reconstructed.values())
                and all(s.within for s in self.arcs.values()))

    def to_text(self) -> str:
        """Flat ``key=value`` lines with stable names."""
        lines = [f"m={self.m}", f"blocks={self.blocks}", f"seed={self.seed}",
                 f"causal={str(self.causal).lower()}"]
        for i in sorted(self.reconstructed):
            lines += [f"pair.{i}.reconstructed={str(self.reconstructed[i]).lower()}",
                      f"pair.{i}.delay={self.delay[i]}",
                      f"pair.{i}.source_rate={self.source_rate[i]:.6f}",
                      f"pair.{i}.code_rate={self.code_rate[i]:.6f}"]
        for a in sorted(self.arcs):
            s = self.arcs[a]
            cap = "inf" if is_inf(s.capacity) else str(s.capacity)
            lines += [f"arc.{a}.capacity={cap}",
                      f"arc.{a}.flow={s.flow}",
                      f"arc.{a}.sub_blocks={s.sub_blocks}",
                      f"arc.{a}.bits_per_step={s.bits_per_step:.6f}",
                      f"arc.{a}.sigma={s.sigma:.6f}",
                      f"arc.{a}.margin={s.margin:.6f}",
                      f"arc.{a}.within={str(s.within).lower()}"]
        lines.append(f"ok={str(self.ok).lower()}")
        return "\n".join(lines) + "\n"


def _split(bits: str, lengths) -> list[str]:
    padded = bits + "0" * (sum(lengths) - len(bits))
    out, pos = [], 0
    for n in lengths:
        out.append(padded[pos:pos + n])
        pos += n
    return out


def simulate(schedule: RoutingSchedule, blocks: int, seed: int = 0) -> SimReport:
    """Run ``blocks`` epochs of encode, split, hop-by-hop forward and decode.

    Every transmission of epoch ``j`` happens at step ``j*m - 1``; the sink
    decodes there, so the delay is ``m - 1``. A decoded block that differs
    from the source block raises ``ReconstructionError``.
    """
    if blocks < 1:
        raise ValueError("blocks must be positive")
    net, m = schedule.net, schedule.m
    rng = SplitMix64(seed)
    samplers = {i: Sampler(s.probs) for i, s in enumerate(schedule.sources, 1)}
    arcs = sorted({a for rs in schedule.routes.values() for r in rs for a in r.internal_arcs})
    per_block = {a: [] for a in arcs}
    coded = {i: 0 for i in schedule.routes}
    report = SimReport(m, blocks, seed)

    for j in range(1, blocks + 1):
        t = j * m - 1
        wire = {a: [] for a in arcs}       # arc -> frames sent at time t
        sent_at = {}                        # (pair, path, hop) -> time
        originals = {}
        for i, src in enumerate(schedule.sources, 1):
            k = schedule.symbols_per_block(i)
            block = tuple(src.alphabet[samplers[i].draw(rng)] for _ in range(k))
            originals[i] = block
            z = schedule.codebooks[i].encode(block)
            coded[i] += len(z)
            lengths = schedule.sub_block_lengths(i, len(z))
            for p, (route, chunk) in enumerate(zip(schedule.routes[i], _split(z, lengths))):
                frame = Frame(i, p, len(chunk), chunk)
                prev = None
                for hop, a in enumerate(route.internal_arcs):
                    if prev is not None:
                        # the forwarding vertex must hold the frame from its in-arc
                        got = [f for f in wire[prev] if (f.pair, f.path) == (i, p)]
                        if len(got) != 1 or net.head(prev) != net.tail(a):
                            report.causal = False
                        frame = got[0] if got else frame
                        if sent_at[i, p, hop - 1] > t:
                            report.causal = False
                    wire[a].append(frame)
                    sent_at[i, p, hop] = t
                    prev = a

        for i in schedule.routes:
            sink_arc = net.sink_arc(i)
            frames = sorted((f for f in wire[sink_arc] if f.pair == i), key=lambda f: f.path)
            bits = "".join(f.payload for f in frames)
            book = schedule.codebooks[i]
            try:
                decoded, _ = book.decode_prefix(bits)
            except ValueError:
                decoded = None
            if decoded != originals[i]:
                raise ReconstructionError(f"pair {i}, block {j}: decoded {decoded!r} != {originals[i]!r}")
            report.delay[i] = m - 1

        for a in arcs:
            per_block[a].append(sum(f.length for f in wire[a]))

    for i, src in enumerate(schedule.sources, 1):
        report.reconstructed[i] = True
        report.source_rate[i] = src.rate
        report.code_rate[i] = coded[i] / (blocks * m)
    for a in arcs:
        xs = per_block[a]
        mean = sum(xs) / blocks
        var = sum((x - mean) ** 2 for x in xs) / (blocks - 1) if blocks > 1 else 0.0
        sigma = sqrt(var / blocks) / m
        subs = schedule.sub_blocks_through(a)
        report.arcs[a] = ArcStats(schedule.capacities[a], schedule.arc_flow(a), subs,
                                  mean / m, sigma, (1 + subs) / m + 3 * sigma)
    return report
