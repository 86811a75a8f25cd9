"""The single-arc cut check over every placement of pairs on one core graph.

The core is the network without its terminals. A placement attaches pair
``k`` as ``sigma<k> -> a`` and ``b -> tau<k>`` for an attachment ``(a, b)``
with ``a`` reaching ``b`` in the core. Paths, bundles and viable cuts only
depend on the attachments, so they are computed once per attachment and the
verdict of a placement reuses the verdict of its prefix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .cuts import _viable_masks
from .graph import INF, Network, as_capacity, bundle, validate_structure

SINK = ("sink arc",)  # stands for in(tau_i) inside an outgoing set


def core_of(net: Network):
    """``(vertices, arcs, capacities)`` of ``net`` with terminals removed."""
    terminals = set(net.sources) | set(net.sinks)
    vertices = [v for v in net.vertices if v not in terminals]
    arcs = {a: ends for a, ends in net.arcs.items()
            if ends[0] not in terminals and ends[1] not in terminals}
    return vertices, arcs, {a: net.capacities[a] for a in arcs}


def place(core, placement, sink_capacity=INF) -> Network:
    """Full network for a placement, named like the corpus generators."""
    vertices, arcs, caps = core
    vertices, arcs, caps = list(vertices), dict(arcs), dict(caps)
    pairs = []
    for k, (a, b) in enumerate(placement, start=1):
        s, t = f"sigma{k}", f"tau{k}"
        vertices += [s, t]
        arcs[f"out{k}"], arcs[f"in{k}"] = (s, a), (b, t)
        caps[f"out{k}"], caps[f"in{k}"] = INF, as_capacity(sink_capacity)
        pairs.append((s, t))
    return validate_structure(vertices, arcs, caps, pairs)


@dataclass
class SweepResult:
    instances: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


class PlacementSweep:
    def __init__(self, core, sink_capacity=INF):
        self.core = core
        self.sink_capacity = sink_capacity
        vertices = sorted(core[0])
        probe = place(core, [(vertices[0], vertices[0])], sink_capacity)
        self._probe = probe
        self.attachments = tuple(
            (a, b) for a in vertices for b in sorted(probe.reach_from([a]) & set(vertices)))
        self._single = {}
        self._paths = {}
        self._bundles = {}
        self._cuts = {}
        self._verdict = {(): True}

    def _net(self, att) -> Network:
        if att not in self._single:
            self._single[att] = place(self.core, [att], self.sink_capacity)
        return self._single[att]

    def internal_paths(self, a, b) -> list[frozenset]:
        """Arc sets of the core's simple ``a -> b`` paths."""
        key = (a, b)
        if key not in self._paths:
            self._paths[key] = [frozenset(p.arcs) for p in self._probe.paths_between(a, b)]
        return self._paths[key]

    def bundle_arcs(self, att) -> frozenset:
        """Core arcs on some path of a pair attached at ``att``."""
        got = self._bundles.get(att)
        if got is None:
            net = self._net(att)
            got = bundle(net, [1]).arcs - {net.source_arc(1), net.sink_arc(1)}
            self._bundles[att] = got
        return got

    def outgoing_sets(self, att, excused: frozenset) -> list[frozenset]:
        """Distinct outgoing sets of the viable cuts of a pair at ``att``."""
        key = (att, excused)
        if key not in self._cuts:
            net = self._net(att)
            sink_arc = net.sink_arc(1)
            seen = []
            for _, O in _viable_masks(net, 1, excused):
                O = frozenset(SINK if a == sink_arc else a for a in O)
                if O not in seen:
                    seen.append(O)
            self._cuts[key] = seen
        return self._cuts[key]

    def holds_at(self, P, i) -> bool:
        """The condition for pair ``i`` (>= 2) of placement ``P``."""
        bundles = [self.bundle_arcs(att) for att in P[:i]]
        mine = bundles[i - 1]
        excused = frozenset().union(*bundles[:i - 1]) & mine
        for O in self.outgoing_sets(P[i - 1], excused):
            if len(O) != 1:
                return False
            (arc,) = O
            if arc is SINK:
                # only pair i's paths use its sink arc, and all of them do
                continue
            touched = [h for h in range(1, i + 1) if arc in bundles[h - 1]]
            for h in touched:
                for s in touched:
                    if s > h:
                        break
                    hits = [arc in p for p in self.internal_paths(P[s - 1][0], P[h - 1][1])]
                    if any(hits) and not all(hits):
                        return False
        return True

    def certified(self, P) -> bool:
        P = tuple(P)
        if P not in self._verdict:
            self._verdict[P] = self.certified(P[:-1]) and (len(P) < 2 or self.holds_at(P, len(P)))
        return self._verdict[P]

    def run(self, max_pairs: int = 3) -> SweepResult:
        res = SweepResult()
        for n in range(1, max_pairs + 1):
            for P in product(self.attachments, repeat=n):
                res.instances += 1
                if not self.certified(P):
                    res.counterexamples.append(P)
        return res
