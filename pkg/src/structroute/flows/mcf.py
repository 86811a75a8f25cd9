"""Exact multicommodity flow feasibility on the node-arc formulation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..graph import INF, Network, bundle, is_inf
from .model import MultiFlow, capacities_of
from .simplex import solve_lp


@dataclass
class MCFResult:
    feasible: bool
    flow: MultiFlow | None
    slack: object = None        # max uniform slack t (strict mode), INF if no finite arcs
    infeasibility: Fraction = Fraction(0)

    @property
    def strictly_feasible(self) -> bool | None:
        if self.slack is None:
            return None
        return self.feasible and (is_inf(self.slack) or self.slack > 0)


def solve_mcf(net: Network, demands, capacities=None, strict: bool = False) -> MCFResult:
    """Find a flow meeting capacity, supply/demand and conservation exactly.

    Commodity ``j`` is only given variables on arcs of its own bundle; any
    feasible flow can shed its cycle components onto that support.
    With ``strict=True`` the uniform slack ``t`` in
    ``sum_j f[a, j] + t <= c[a]`` (finite arcs) is maximised and reported.
    """
    caps = capacities_of(net, capacities)
    h = [Fraction(d) for d in demands]
    if len(h) != net.n or any(d <= 0 for d in h):
        raise ValueError("need one positive demand per pair")
    var = []  # (arc, j)
    for j in range(1, net.n + 1):
        for a in sorted(bundle(net, [j]).arcs):
            var.append((a, j))
    finite = [a for a in net.arc_ids if not is_inf(caps[a])]
    col = {k: idx for idx, k in enumerate(var)}
    slack_col = {a: len(var) + k for k, a in enumerate(finite)}
    t_col = len(var) + len(finite) if strict else None
    ncols = len(var) + len(finite) + (1 if strict else 0)

    A, b = [], []

    def new_row():
        return [0] * ncols

    for j in range(1, net.n + 1):
        ends = (net.source(j), net.sink(j))
        bv = bundle(net, [j])
        for v in sorted(bv.vertices):
            if v in ends:
                continue
            row = new_row()
            for a in net.in_arcs(v):
                if (a, j) in col:
                    row[col[a, j]] += 1
            for a in net.out_arcs(v):
                if (a, j) in col:
                    row[col[a, j]] -= 1
            A.append(row)
            b.append(0)
        for a in (net.source_arc(j), net.sink_arc(j)):
            row = new_row()
            row[col[a, j]] = 1
            A.append(row)
            b.append(h[j - 1])
    for a in finite:
        row = new_row()
        for j in range(1, net.n + 1):
            if (a, j) in col:
                row[col[a, j]] = 1
        row[slack_col[a]] = 1
        if strict:
            row[t_col] = 1
        A.append(row)
        b.append(caps[a])

    cost = [0] * ncols
    if strict:
        cost[t_col] = -1
    res = solve_lp(cost, A, b)
    if res.status == "infeasible":
        return MCFResult(False, None, None, res.infeasibility)
    if res.status == "unbounded":
        # only possible for the slack variable when no arc is finite
        res = solve_lp([0] * ncols, A, b)
    flow = MultiFlow(net.n)
    for k, (a, j) in enumerate(var):
        if res.x[k]:
            flow.values[a, j] = res.x[k]
    slack = None
    if strict:
        slack = INF if not finite else res.x[t_col]
    return MCFResult(True, flow, slack)
