"""Flow containers and exact constraint checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..graph import Network, is_inf

ZERO = Fraction(0)


class FlowError(ValueError):
    pass


def capacities_of(net: Network, capacities=None) -> dict:
    caps = dict(net.capacities)
    if capacities:
        caps.update(capacities)
    return caps


@dataclass
class MultiFlow:
    """Per-arc, per-commodity rates ``values[arc, j]`` (commodities 1..n)."""

    n: int
    values: dict = field(default_factory=dict)

    def get(self, arc, j) -> Fraction:
        return self.values.get((arc, j), ZERO)

    def commodity(self, j) -> dict:
        return {a: v for (a, k), v in self.values.items() if k == j and v}

    def total(self, arc) -> Fraction:
        return sum((self.get(arc, j) for j in range(1, self.n + 1)), ZERO)

    def set_commodity(self, j, flow: dict):
        for key in [k for k in self.values if k[1] == j]:
            del self.values[key]
        for a, v in flow.items():
            if v:
                self.values[a, j] = Fraction(v)

    def violations(self, net: Network, demands, capacities=None) -> list[str]:
        """Exact check of nonnegativity, capacity, supply/demand, conservation."""
        caps = capacities_of(net, capacities)
        bad = []
        for (a, j), v in sorted(self.values.items()):
            if v < 0:
                bad.append(f"negative flow on {a} for commodity {j}")
        for a in net.arc_ids:
            if not is_inf(caps[a]) and self.total(a) > caps[a]:
                bad.append(f"capacity exceeded on {a}: {self.total(a)} > {caps[a]}")
        for j in range(1, self.n + 1):
            h = Fraction(demands[j - 1])
            if self.get(net.source_arc(j), j) != h:
                bad.append(f"commodity {j}: source arc carries {self.get(net.source_arc(j), j)} != {h}")
            if self.get(net.sink_arc(j), j) != h:
                bad.append(f"commodity {j}: sink arc carries {self.get(net.sink_arc(j), j)} != {h}")
            ends = (net.source(j), net.sink(j))
            for v in net.vertices:
                if v in ends:
                    continue
                inflow = sum((self.get(a, j) for a in net.in_arcs(v)), ZERO)
                outflow = sum((self.get(a, j) for a in net.out_arcs(v)), ZERO)
                if inflow != outflow:
                    bad.append(f"commodity {j}: conservation fails at {v} ({inflow} in, {outflow} out)")
        return bad


def conservation_errors(net: Network, q: dict, src, dst) -> list[str]:
    bad = []
    for a, v in q.items():
        if a not in net.arcs:
            bad.append(f"unknown arc {a}")
        elif v < 0:
            bad.append(f"negative flow on {a}")
    if bad:
        return bad
    for v in net.vertices:
        if v in (src, dst):
            continue
        inflow = sum((q.get(a, ZERO) for a in net.in_arcs(v)), ZERO)
        outflow = sum((q.get(a, ZERO) for a in net.out_arcs(v)), ZERO)
        if inflow != outflow:
            bad.append(f"conservation fails at {v} ({inflow} in, {outflow} out)")
    return bad
