"""Path/cycle decomposition of a single-commodity flow."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..graph import Network, Path, enumerate_i_paths
from .model import ZERO, FlowError, conservation_errors


@dataclass
class PathDecomposition:
    pair: int
    paths: list = field(default_factory=list)   # [(Path, rate)]
    cycles: list = field(default_factory=list)  # [(arc tuple, rate)]

    @property
    def acyclic(self) -> bool:
        return not self.cycles

    def arc_flows(self, include_cycles: bool = True) -> dict:
        """Superpose the components back into per-arc values."""
        out = {}
        comps = list(self.paths) + (list(self.cycles) if include_cycles else [])
        for item, rate in comps:
            arcs = item.arcs if isinstance(item, Path) else item
            for a in arcs:
                out[a] = out.get(a, ZERO) + rate
        return out

    @property
    def value(self) -> Fraction:
        return sum((r for _, r in self.paths), ZERO)


def _canonical_cycle(arcs):
    k = arcs.index(min(arcs))
    return tuple(arcs[k:] + arcs[:k])


def decompose_flow(net: Network, q: dict, i: int) -> PathDecomposition:
    """Greedy peeling: widest i-path first (ties: lexicographic), then cycles.

    ``q`` maps arc -> nonnegative rational and must conserve flow away from
    the pair's source and sink; the decomposition reproduces it exactly.
    """
    bad = conservation_errors(net, q, net.source(i), net.sink(i))
    if bad:
        raise FlowError("; ".join(bad))
    rem = {a: Fraction(v) for a, v in q.items() if v}
    out = PathDecomposition(i)
    paths = enumerate_i_paths(net, i)
    while True:
        best, width = None, ZERO
        for p in paths:
            w = min((rem.get(a, ZERO) for a in p.arcs), default=ZERO)
            if w > width:
                best, width = p, w
        if best is None:
            break
        for a in best.arcs:
            rem[a] -= width
            if not rem[a]:
                del rem[a]
        out.paths.append((best, width))

    cycles = {}
    while rem:
        # what is left is a circulation: follow smallest positive out-arcs
        start = min(rem)
        seq = [start]
        pos = {net.tail(start): 0}
        v = net.head(start)
        while v not in pos:
            pos[v] = len(seq)
            nxt = min(a for a in net.out_arcs(v) if a in rem)
            seq.append(nxt)
            v = net.head(nxt)
        cyc = seq[pos[v]:]
        width = min(rem[a] for a in cyc)
        for a in cyc:
            rem[a] -= width
            if not rem[a]:
                del rem[a]
        key = _canonical_cycle(cyc)
        cycles[key] = cycles.get(key, ZERO) + width
    out.cycles = sorted(cycles.items())
    return out
