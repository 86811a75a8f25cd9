"""Max-flow on an i-bundle with residual min-cut extraction."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from ..graph import INF, Network, bundle, is_inf
from .decompose import decompose_flow
from .model import ZERO


@dataclass
class MaxFlowResult:
    value: object               # Fraction, or INF
    flow: dict | None           # arc -> Fraction on the bundle (acyclic)
    cut: frozenset | None       # residual-reachable vertex set U
    outgoing: frozenset | None  # OUT(U) within the bundle
    incoming: frozenset | None  # IN(U) within the bundle

    @property
    def infinite(self) -> bool:
        return is_inf(self.value)


def _slack(q, r, a):
    return is_inf(r[a]) or q[a] < r[a]


def residual_cut(net: Network, i: int, q: dict, r: dict) -> frozenset:
    """Vertices reachable from the source by forward-slack / backward-flow steps."""
    arcs = bundle(net, [i]).arcs
    src = net.source(i)
    seen = {src}
    stack = [src]
    while stack:
        v = stack.pop()
        for a in net.out_arcs(v):
            if a in arcs and net.head(a) not in seen and _slack(q, r, a):
                seen.add(net.head(a))
                stack.append(net.head(a))
        for a in net.in_arcs(v):
            if a in arcs and net.tail(a) not in seen and q[a] > 0:
                seen.add(net.tail(a))
                stack.append(net.tail(a))
    return frozenset(seen)


def max_flow(net: Network, residual: dict, i: int) -> MaxFlowResult:
    """Shortest-augmenting-path max flow on pair ``i``'s bundle.

    ``residual`` maps every bundle arc to a nonnegative Fraction or ``INF``
    (zero allowed). Cycle components of the result are discarded, so the
    returned flow is acyclic. If some i-path consists only of infinite
    arcs the value is ``INF`` and no flow or cut is returned.
    """
    arcs = bundle(net, [i]).arcs
    r = {}
    for a in arcs:
        v = residual[a]
        r[a] = INF if is_inf(v) else Fraction(v)
        if r[a] < 0:
            raise ValueError(f"negative residual on {a}")
    src, snk = net.source(i), net.sink(i)

    inf_arcs = [a for a in arcs if is_inf(r[a])]
    if snk in net.reach_from([src], avoiding=set(net.arcs) - set(inf_arcs)):
        return MaxFlowResult(INF, None, None, None, None)

    q = {a: ZERO for a in arcs}
    while True:
        prev = {src: None}
        dq = deque([src])
        while dq and snk not in prev:
            v = dq.popleft()
            for a in net.out_arcs(v):
                w = net.head(a)
                if a in arcs and w not in prev and _slack(q, r, a):
                    prev[w] = (a, 1)
                    dq.append(w)
            for a in net.in_arcs(v):
                w = net.tail(a)
                if a in arcs and w not in prev and q[a] > 0:
                    prev[w] = (a, -1)
                    dq.append(w)
        if snk not in prev:
            break
        steps = []
        v = snk
        while prev[v] is not None:
            a, d = prev[v]
            steps.append((a, d))
            v = net.tail(a) if d == 1 else net.head(a)
        width = min((r[a] - q[a]) if d == 1 else q[a]
                    for a, d in steps if not (d == 1 and is_inf(r[a])))
        for a, d in steps:
            q[a] += width * d

    dec = decompose_flow(net, q, i)
    acyclic = {a: ZERO for a in arcs}
    acyclic.update(dec.arc_flows(include_cycles=False))
    U = residual_cut(net, i, acyclic, r)
    out_arcs = frozenset(a for a in arcs if net.tail(a) in U and net.head(a) not in U)
    in_arcs = frozenset(a for a in arcs if net.head(a) in U and net.tail(a) not in U)
    return MaxFlowResult(dec.value, acyclic, U, out_arcs, in_arcs)
