"""Pair-by-pair flow construction over residual capacities."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..graph import INF, Network, bundle, enumerate_i_paths, is_inf
from .maxflow import max_flow
from .model import MultiFlow, capacities_of


@dataclass
class Step:
    pair: int
    case: int              # 1: an all-infinite i-path exists; 2: max-flow
    value: object          # max-flow value (case 2) or INF
    scale: Fraction | None  # demand / value (case 2)
    cut: frozenset | None = None
    outgoing: frozenset | None = None


@dataclass
class ConstructResult:
    ok: bool
    flow: MultiFlow
    steps: list = field(default_factory=list)
    failed_pair: int | None = None
    cut: frozenset | None = None
    outgoing: frozenset | None = None

    def __bool__(self):
        return self.ok


def residual_capacities(net: Network, flow: MultiFlow, i: int, capacities=None) -> dict:
    """Capacity left after commodities ``1..i-1``; infinite arcs stay ``INF``."""
    caps = capacities_of(net, capacities)
    r = {}
    for a in net.arc_ids:
        if is_inf(caps[a]):
            r[a] = INF
        else:
            r[a] = caps[a] - sum((flow.get(a, j) for j in range(1, i)), Fraction(0))
    return r


def sequential_construct(net: Network, demands, capacities=None) -> ConstructResult:
    """Route pairs in order, each as a scaled acyclic max-flow on its bundle.

    Fails at the first pair whose bundle max-flow over the residual
    capacities falls short of its demand, reporting that min-cut.
    """
    caps = capacities_of(net, capacities)
    h = [Fraction(d) for d in demands]
    flow = MultiFlow(net.n)
    result = ConstructResult(True, flow)
    for i in range(1, net.n + 1):
        need = h[i - 1]
        free = next((p for p in enumerate_i_paths(net, i)
                     if all(is_inf(caps[a]) for a in p.arcs)), None)
        if free is not None:
            flow.set_commodity(i, {a: need for a in free.arcs})
            result.steps.append(Step(i, 1, INF, None))
            continue
        r = residual_capacities(net, flow, i, caps)
        mf = max_flow(net, {a: r[a] for a in bundle(net, [i]).arcs}, i)
        if mf.value < need:
            result.steps.append(Step(i, 2, mf.value, None, mf.cut, mf.outgoing))
            result.ok = False
            result.failed_pair = i
            result.cut = mf.cut
            result.outgoing = mf.outgoing
            return result
        scale = need / mf.value
        flow.set_commodity(i, {a: scale * v for a, v in mf.flow.items()})
        result.steps.append(Step(i, 2, mf.value, scale, mf.cut, mf.outgoing))
    return result
