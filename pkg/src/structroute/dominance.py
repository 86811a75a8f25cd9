"""Structural dominance: downstream arcs, indirect walks and the SDOM closure."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Network, Path


@dataclass(frozen=True)
class IndirectWalk:
    """Alternating forward/reverse legs ``(a1, b1, ..., a_{j-1}, b_{j-1}, a_j)``.

    ``forward[l]`` runs from a source to ``junctions[l]`` (or, for the last
    leg, to the sink); ``reverse[l]`` runs from the next source to
    ``junctions[l]`` and is traversed backwards.
    """

    pair: int
    forward: tuple[Path, ...]
    reverse: tuple[Path, ...]

    @property
    def junctions(self):
        return tuple(p.end for p in self.reverse)

    @property
    def legs(self) -> tuple[Path, ...]:
        out = []
        for k, p in enumerate(self.forward):
            out.append(p)
            if k < len(self.reverse):
                out.append(self.reverse[k])
        return tuple(out)

    @property
    def arcs(self) -> frozenset:
        return frozenset(a for p in self.legs for a in p.arcs)

    def check(self, net: Network) -> list[str]:
        """Violated walk conditions (empty when the walk is well formed)."""
        bad = []
        i = self.pair
        if len(self.forward) != len(self.reverse) + 1:
            bad.append("leg count")
            return bad
        if self.forward[0].start != net.source(i):
            bad.append("first leg does not start at the source")
        if self.forward[-1].end != net.sink(i):
            bad.append("last leg does not end at the sink")
        srcs = set(net.sources)
        for k, b in enumerate(self.reverse):
            if b.end != self.forward[k].end:
                bad.append(f"legs {2 * k + 1},{2 * k + 2} do not share an end vertex")
            if b.start != self.forward[k + 1].start or b.start not in srcs:
                bad.append(f"reverse leg {k + 1} does not start at the next leg's source")
        for p in self.legs:
            if len(set(p.vertices)) != len(p.vertices):
                bad.append("leg is not a simple path")
            for k, a in enumerate(p.arcs):
                if net.arcs[a] != (p.vertices[k], p.vertices[k + 1]):
                    bad.append(f"leg arc {a} does not chain")
        to_sink = net.reach_to([net.sink(i)])
        for mu in self.junctions:
            if mu not in to_sink:
                bad.append(f"junction {mu} cannot reach the sink")
        return bad


def is_downstream(net: Network, arc, C: Iterable[str]) -> bool:
    """True iff every path from a source to the tail of ``arc`` meets ``C``."""
    C = set(C)
    if arc not in net.arcs or not C <= set(net.arcs):
        raise KeyError("unknown arc")
    return net.tail(arc) not in net.reach_from(net.sources, C)


def _bfs_path(net: Network, src, dst, avoiding) -> Path:
    # shortest path by arc count, ties broken by arc id
    prev = {src: None}
    frontier = [src]
    while frontier and dst not in prev:
        nxt = []
        for v in frontier:
            for a in net.out_arcs(v):
                w = net.head(a)
                if a in avoiding or w in prev:
                    continue
                prev[w] = a
                nxt.append(w)
        frontier = nxt
    arcs = []
    v = dst
    while prev[v] is not None:
        arcs.append(prev[v])
        v = net.tail(prev[v])
    arcs.reverse()
    return Path((src,) + tuple(net.head(a) for a in arcs), tuple(arcs))


def find_bypassing_ii_walk(net: Network, i: int, C: Iterable[str]) -> IndirectWalk | None:
    """An indirect ``i``-walk using no arc of ``C``, or ``None`` if none exists.

    Works on reachability rather than walks: a source joins the reached set
    once it and an already-reached source can both reach a common vertex
    that itself reaches the sink (in the full graph), all while avoiding C.
    """
    C = frozenset(C)
    sink = net.sink(i)
    to_sink = net.reach_to([sink])
    first = net.source(i)
    reach_of = {}

    def fwd(s):
        if s not in reach_of:
            reach_of[s] = net.reach_from([s], C)
        return reach_of[s]

    parent = {first: None}  # source -> (previous source, junction)
    queue = [first]
    goal = None
    while queue:
        s = queue.pop(0)
        if sink in fwd(s):
            goal = s
            break
        joints = fwd(s) & to_sink
        for t in net.sources:
            if t in parent:
                continue
            common = joints & fwd(t)
            if common:
                parent[t] = (s, min(common))
                queue.append(t)
    if goal is None:
        return None

    chain = []
    s = goal
    while parent[s] is not None:
        prev, mu = parent[s]
        chain.append((prev, mu, s))
        s = prev
    chain.reverse()
    forward, reverse = [], []
    for prev, mu, nxt in chain:
        forward.append(_bfs_path(net, prev, mu, C))
        reverse.append(_bfs_path(net, nxt, mu, C))
    forward.append(_bfs_path(net, goal, sink, C))
    return IndirectWalk(i, tuple(forward), tuple(reverse))


def all_walks_blocked(net: Network, i: int, C: Iterable[str]) -> bool:
    return find_bypassing_ii_walk(net, i, C) is None


def _admits(net: Network, arc, C: frozenset, blocked_cache: dict) -> bool:
    """Whether ``arc`` (not in C) must join C under the closure rules."""
    term = net.terminal_arc_pairs.get(arc)
    if term is not None:
        i, side = term
        partner = net.sink_arc(i) if side == "out" else net.source_arc(i)
        if partner in C:
            return True
    if is_downstream(net, arc, C):
        return True
    if term is not None:
        i = term[0]
        if i not in blocked_cache:
            blocked_cache[i] = all_walks_blocked(net, i, C)
        if blocked_cache[i]:
            return True
    return False


def sdom(net: Network, B: Iterable[str], order: Sequence[str] | None = None) -> frozenset:
    """Smallest arc set containing ``B`` closed under the dominance rules.

    Greedy loop: test arcs outside C in ``order`` (default: sorted ids);
    after every addition restart the test set from all arcs outside C.
    The rule "source arc in C iff sink arc in C" is applied as "if one is
    in C, add the other".
    """
    C = set(B)
    unknown = C - set(net.arcs)
    if unknown:
        raise KeyError(f"unknown arcs: {sorted(unknown)}")
    order = list(order) if order is not None else list(net.arc_ids)
    if set(order) != set(net.arcs):
        raise ValueError("order must list every arc exactly once")
    key = ("sdom", frozenset(C)) if order == list(net.arc_ids) else None
    if key is not None and key in net._cache:
        return net._cache[key]
    blocked_cache: dict = {}
    frozen = frozenset(C)
    pending = [a for a in order if a not in C]
    while pending:
        a = pending.pop(0)
        if _admits(net, a, frozen, blocked_cache):
            C.add(a)
            frozen = frozenset(C)
            blocked_cache = {}
            pending = [b for b in order if b not in C]
    result = frozenset(C)
    if key is not None:
        net._cache[key] = result
    return result


def sdom_contains(net: Network, B: Iterable[str], target) -> tuple[bool, str]:
    """Membership of ``target`` in ``sdom(B)`` with the reason found.

    Certificates: ``"member"`` (already in B), ``"downstream"``,
    ``"all-ii-walks-blocked"``, ``"closure"`` (needed the full closure) or
    ``"not-dominated"``.
    """
    B = frozenset(B)
    if target in B:
        return True, "member"
    if is_downstream(net, target, B):
        return True, "downstream"
    term = net.terminal_arc_pairs.get(target)
    if term is not None and all_walks_blocked(net, term[0], B):
        return True, "all-ii-walks-blocked"
    if target in sdom(net, B):
        return True, "closure"
    return False, "not-dominated"
