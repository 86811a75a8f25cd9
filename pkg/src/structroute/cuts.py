"""J-disjointness, source augmentation, the D_i families and viable i-cuts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .dominance import sdom
from .graph import Network, bundle, enumerate_i_paths


@dataclass(frozen=True)
class ViableCut:
    pair: int
    vertices: frozenset
    outgoing: frozenset  # OUT(U) restricted to the pair's bundle


@dataclass(frozen=True)
class CutCheck:
    viable: bool
    failed: tuple[str, ...]
    outgoing: frozenset

    def __bool__(self):
        return self.viable


@dataclass(frozen=True)
class DReport:
    member: bool
    disjoint: bool
    per_h: tuple  # (h, touches bundle h, dominated or None)

    def __bool__(self):
        return self.member


def is_J_disjoint(net: Network, B: Iterable[str], J: Iterable[int]) -> bool:
    """No j-path (j in J) passes through two or more arcs of ``B``.

    Enumerates every j-path, so the cost is exponential in the worst case.
    """
    B = frozenset(B)
    if len(B) < 2:
        return True
    for j in J:
        for p in enumerate_i_paths(net, j):
            if sum(1 for a in p.arcs if a in B) > 1:
                return False
    return True


def source_augmented(net: Network, E: Iterable[str], h: int) -> frozenset:
    """``E`` plus the source arcs of pairs after ``h`` and of pairs before
    ``h`` whose bundle ``E`` does not touch."""
    E = frozenset(E)
    extra = set(range(h + 1, net.n + 1))
    for j in range(1, h):
        if not E & bundle(net, [j]).arcs:
            extra.add(j)
    return E | {net.source_arc(j) for j in extra}


def in_D_i(net: Network, E: Iterable[str], i: int) -> DReport:
    """Membership of ``E`` in the family of i-downward dominated sets."""
    E = frozenset(E)
    disjoint = is_J_disjoint(net, E, range(1, i + 1))
    per_h = []
    member = disjoint
    for h in range(1, i + 1):
        touches = bool(E & bundle(net, [h]).arcs)
        if not touches:
            per_h.append((h, False, None))
            continue
        dominated = net.source_arc(h) in sdom(net, source_augmented(net, E, h))
        per_h.append((h, True, dominated))
        member = member and dominated
    return DReport(member, disjoint, tuple(per_h))


# --- viable cuts -------------------------------------------------------------

def _exits_once(path, U) -> bool:
    # starts inside U (the source); once outside it never comes back
    outside = False
    for v in path.vertices:
        if v in U:
            if outside:
                return False
        else:
            outside = True
    return outside


def is_viable_i_cut(net: Network, U: Iterable[str], i: int) -> CutCheck:
    """Check the viability conditions for i-cut ``U``, in order.

    ``failed`` lists the numbers of the conditions that do not hold, or
    ``("not an i-cut",)`` when ``U`` is not an i-cut at all. Condition 4 is
    a reachability search inside U over bundle arcs, where an arc may be
    walked backwards only if it lies on an i-path that leaves U for good.
    """
    return _check(net, frozenset(U), i, _context(net, i))


def _context(net: Network, i: int):
    return bundle(net, [i]), enumerate_i_paths(net, i), bundle(net, range(1, i)).arcs


def _check(net: Network, U: frozenset, i: int, ctx) -> CutCheck:
    bi, paths, earlier = ctx
    if net.source(i) not in U or net.sink(i) in U or not U <= bi.vertices:
        return CutCheck(False, ("not an i-cut",), frozenset())
    O = frozenset(a for a in bi.arcs if net.tail(a) in U and net.head(a) not in U)
    failed = []
    if not all(net.is_finite(a) for a in O):
        failed.append("1")
    good = [p for p in paths if _exits_once(p, U)]
    if not good:
        failed.append("2")
    good_arcs = {a for p in good for a in p.arcs}
    if not all(a in good_arcs or a in earlier for a in O):
        failed.append("3")
    # condition 4
    seen = {net.source(i)}
    stack = [net.source(i)]
    while stack:
        v = stack.pop()
        for a in net.out_arcs(v):
            w = net.head(a)
            if a in bi.arcs and w in U and w not in seen:
                seen.add(w)
                stack.append(w)
        for a in net.in_arcs(v):
            w = net.tail(a)
            if a in good_arcs and w in U and w not in seen:
                seen.add(w)
                stack.append(w)
    if seen != U:
        failed.append("4")
    return CutCheck(not failed, tuple(failed), O)


def candidate_i_cuts(net: Network, i: int) -> list[frozenset]:
    """i-cuts that are connected (ignoring direction) through bundle arcs.

    Every viable cut is among them, since condition 4 needs such a path
    to each member vertex.
    """
    bi = bundle(net, [i])
    src, snk = net.source(i), net.sink(i)
    nbrs = {v: set() for v in bi.vertices}
    for a in bi.arcs:
        t, h = net.arcs[a]
        nbrs[t].add(h)
        nbrs[h].add(t)
    start = frozenset([src])
    found = {start}
    stack = [start]
    while stack:
        U = stack.pop()
        frontier = set().union(*(nbrs[v] for v in U)) - U - {snk}
        for w in frontier:
            V = U | {w}
            if V not in found:
                found.add(V)
                stack.append(V)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def _viable_masks(net: Network, i: int, earlier=None) -> list[tuple[int, frozenset]]:
    """Viable i-cuts as (vertex bitmask, outgoing arcs).

    Same result as filtering :func:`candidate_i_cuts` through
    :func:`is_viable_i_cut`, with sets held as int bitmasks. ``earlier``
    overrides the arcs of the lower-indexed bundles.
    """
    vidx = net._cache["vidx"]
    bi = bundle(net, [i])
    if earlier is None:
        earlier = bundle(net, range(1, i)).arcs
    src, snk = 1 << vidx[net.source(i)], 1 << vidx[net.sink(i)]
    arcs = sorted(bi.arcs)
    ends = [(1 << vidx[net.tail(a)], 1 << vidx[net.head(a)]) for a in arcs]
    finite = excused = 0
    nbrs, fwd, bwd = {}, {}, {}
    for k, (a, (t, h)) in enumerate(zip(arcs, ends)):
        if net.is_finite(a):
            finite |= 1 << k
        if a in earlier:
            excused |= 1 << k
        nbrs[t] = nbrs.get(t, 0) | h
        nbrs[h] = nbrs.get(h, 0) | t
        fwd.setdefault(t, []).append(h)
        bwd.setdefault(h, []).append((1 << k, t))
    abit = {a: 1 << k for k, a in enumerate(arcs)}
    # a path leaves U for good iff U meets it in a proper prefix
    exits = []
    for p in enumerate_i_paths(net, i):
        vmask, prefixes = 0, set()
        for v in p.vertices[:-1]:
            vmask |= 1 << vidx[v]
            prefixes.add(vmask)
        vmask |= 1 << vidx[p.vertices[-1]]
        exits.append((vmask, prefixes, sum(abit[a] for a in p.arcs)))

    found = {src}
    stack = [src]
    out = []
    while stack:
        U = stack.pop()
        frontier = 0
        for b in _bits(U):
            frontier |= nbrs.get(b, 0)
        for b in _bits(frontier & ~U & ~snk):
            V = U | b
            if V not in found:
                found.add(V)
                stack.append(V)
        O = 0
        for k, (t, h) in enumerate(ends):
            if t & U and not h & U:
                O |= 1 << k
        if O & ~finite:
            continue
        good = 0
        for pmask, prefixes, amask in exits:
            if U & pmask in prefixes:
                good |= amask
        if not good or O & ~(good | excused):
            continue
        seen = src
        todo = [src]
        while todo:
            v = todo.pop()
            for w in fwd.get(v, ()):
                if w & U and not w & seen:
                    seen |= w
                    todo.append(w)
            for k, w in bwd.get(v, ()):
                if k & good and w & U and not w & seen:
                    seen |= w
                    todo.append(w)
        if seen == U:
            out.append((U, frozenset(arcs[k] for k in range(len(arcs)) if O >> k & 1)))
    return out


def enumerate_viable_i_cuts(net: Network, i: int) -> list[ViableCut]:
    """All viable i-cuts, ordered by size then sorted member ids (cached)."""
    key = ("viable", i)
    if key not in net._cache:
        names = net.vertices
        cuts = []
        for U, O in _viable_masks(net, i):
            members = frozenset(names[k] for k in range(U.bit_length()) if U >> k & 1)
            cuts.append(ViableCut(i, members, O))
        cuts.sort(key=lambda c: (len(c.vertices), sorted(c.vertices)))
        net._cache[key] = cuts
    return net._cache[key]


def outgoing_view(cuts: Iterable[ViableCut]) -> list[frozenset]:
    """Distinct outgoing arc sets, first-seen order."""
    seen = []
    for c in cuts:
        if c.outgoing not in seen:
            seen.append(c.outgoing)
    return seen
