"""Graphviz export."""

from __future__ import annotations

from .graph import Network, is_inf
from .netfile import format_rational

ARC_HIGHLIGHT = 'color="red", penwidth=2'
VERTEX_HIGHLIGHT = 'style="filled", fillcolor="lightblue"'


def _q(s) -> str:
    return '"' + str(s).replace('"', '\\"') + '"'


def export_dot(net: Network, highlight_arcs=(), highlight_vertices=(), capacities=None) -> str:
    """Deterministic DOT text; terminals are boxes, highlighted arcs red."""
    caps = dict(net.capacities)
    if capacities:
        caps.update(capacities)
    ha, hv = set(highlight_arcs), set(highlight_vertices)
    unknown = (ha - set(net.arcs)) | (hv - set(net.vertices))
    if unknown:
        raise KeyError(f"unknown ids: {', '.join(sorted(unknown))}")
    terminals = set(net.sources) | set(net.sinks)
    lines = ["digraph network {", "  rankdir=LR;"]
    for v in net.vertices:
        attrs = ["shape=box" if v in terminals else "shape=circle"]
        if v in hv:
            attrs.append(VERTEX_HIGHLIGHT)
        lines.append(f"  {_q(v)} [{', '.join(attrs)}];")
    for a in net.arc_ids:
        t, h = net.arcs[a]
        cap = "inf" if is_inf(caps[a]) else format_rational(caps[a])
        attrs = [f"label={_q(f'{a} ({cap})')}"]
        if a in ha:
            attrs.append(ARC_HIGHLIGHT)
        lines.append(f"  {_q(t)} -> {_q(h)} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
