"""n-pairs network structures and the path/reachability primitives.

Pair indices are 1-based throughout the package (pair ``i`` is
``network.pairs[i - 1]``). Vertex and arc ids are strings; every "first" or
"smallest" choice follows their lexicographic order.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import _kernels

INF = float("inf")


def is_inf(value) -> bool:
    return value is INF or (type(value) is float and value == INF)


def as_capacity(value):
    """Normalise a capacity: ``INF`` or a strictly positive Fraction."""
    if isinstance(value, str):
        if value.strip().lower() in ("inf", "infinity"):
            return INF
        value = Fraction(value.strip())
    if value == INF:
        return INF
    value = Fraction(value)
    if value <= 0:
        raise ValueError("capacity must be positive")
    return value


class StructureError(ValueError):
    """Raised when a candidate network violates the standing assumptions."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class Path:
    """A simple directed path as parallel vertex and arc sequences."""

    vertices: tuple[str, ...]
    arcs: tuple[str, ...]

    def __len__(self):
        return len(self.arcs)

    def __contains__(self, arc):
        return arc in self.arcs

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]


@dataclass(frozen=True)
class Subgraph:
    vertices: frozenset
    arcs: frozenset


@dataclass(frozen=True, eq=False)
class Network:
    """Validated structure: digraph, capacities and ordered source-sink pairs.

    Build instances with :func:`validate_structure`; the constructor itself
    does not check anything.
    """

    vertices: tuple[str, ...]
    arcs: Mapping[str, tuple[str, str]]
    capacities: Mapping[str, object]
    pairs: tuple[tuple[str, str], ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        vidx = {v: k for k, v in enumerate(self.vertices)}
        arc_ids = tuple(sorted(self.arcs))
        aidx = {a: k for k, a in enumerate(arc_ids)}
        n = len(self.vertices)
        c = self._cache
        c["vidx"], c["arc_ids"], c["aidx"] = vidx, arc_ids, aidx
        tails = [vidx[self.arcs[a][0]] for a in arc_ids]
        heads = [vidx[self.arcs[a][1]] for a in arc_ids]
        c["fwd"] = _csr(n, tails, heads)
        c["rev"] = _csr(n, heads, tails)
        c["out_of"] = {v: [] for v in self.vertices}
        c["into"] = {v: [] for v in self.vertices}
        for a in arc_ids:
            t, h = self.arcs[a]
            c["out_of"][t].append(a)
            c["into"][h].append(a)

    # --- basic accessors -------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.pairs)

    @property
    def arc_ids(self) -> tuple[str, ...]:
        return self._cache["arc_ids"]

    def tail(self, arc):
        return self.arcs[arc][0]

    def head(self, arc):
        return self.arcs[arc][1]

    def source(self, i):
        return self.pairs[i - 1][0]

    def sink(self, i):
        return self.pairs[i - 1][1]

    @property
    def sources(self):
        return [s for s, _ in self.pairs]

    @property
    def sinks(self):
        return [t for _, t in self.pairs]

    def out_arcs(self, v) -> list[str]:
        return self._cache["out_of"][v]

    def in_arcs(self, v) -> list[str]:
        return self._cache["into"][v]

    def source_arc(self, i):
        """The unique arc leaving source ``i``."""
        return self.out_arcs(self.source(i))[0]

    def sink_arc(self, i):
        """The unique arc entering sink ``i``."""
        return self.in_arcs(self.sink(i))[0]

    def is_finite(self, arc) -> bool:
        return not is_inf(self.capacities[arc])

    @property
    def finite_arcs(self) -> frozenset:
        return frozenset(a for a in self.arcs if self.is_finite(a))

    @property
    def terminal_arc_pairs(self):
        """``{arc: (pair index, 'out' | 'in')}`` for source and sink arcs."""
        key = "terminal_arc_pairs"
        if key not in self._cache:
            d = {}
            for i in range(1, self.n + 1):
                d[self.source_arc(i)] = (i, "out")
                d[self.sink_arc(i)] = (i, "in")
            self._cache[key] = d
        return self._cache[key]

    def with_capacities(self, capacities: Mapping[str, object]) -> "Network":
        """Copy with some capacities replaced (source arcs stay infinite)."""
        caps = dict(self.capacities)
        for a, v in capacities.items():
            caps[a] = as_capacity(v)
        return validate_structure(self.vertices, self.arcs, caps, self.pairs)

    def reordered(self, order: Sequence[int]) -> "Network":
        """Copy whose pair ``k`` is the current pair ``order[k - 1]``."""
        if sorted(order) != list(range(1, self.n + 1)):
            raise ValueError(f"not a permutation of 1..{self.n}: {order}")
        pairs = tuple(self.pairs[i - 1] for i in order)
        return Network(self.vertices, self.arcs, self.capacities, pairs)

    # --- kernel plumbing -------------------------------------------------
    def _blocked(self, avoiding: Iterable[str] = ()) -> bytearray:
        aidx = self._cache["aidx"]
        mask = bytearray(len(aidx))
        for a in avoiding:
            mask[aidx[a]] = 1
        return mask

    def _allowed_only(self, arcs: Iterable[str]) -> bytearray:
        aidx = self._cache["aidx"]
        mask = bytearray(b"\x01" * len(aidx))
        for a in arcs:
            mask[aidx[a]] = 0
        return mask

    def _reach_set(self, starts, blocked, reverse=False) -> set:
        off, nbr, eid = self._cache["rev" if reverse else "fwd"]
        vidx = self._cache["vidx"]
        seen = _kernels.reach(off, nbr, eid, len(self.vertices),
                              [vidx[s] for s in starts], blocked)
        return {self.vertices[k] for k in range(len(self.vertices)) if seen[k]}

    def reach_from(self, starts: Iterable[str], avoiding: Iterable[str] = ()) -> set:
        """Vertices reachable from any of ``starts`` without using ``avoiding``."""
        return self._reach_set(list(starts), self._blocked(avoiding))

    def reach_to(self, targets: Iterable[str], avoiding: Iterable[str] = ()) -> set:
        """Vertices that can reach one of ``targets`` without using ``avoiding``."""
        return self._reach_set(list(targets), self._blocked(avoiding), reverse=True)

    def paths_between(self, src, dst, avoiding: Iterable[str] = (),
                      within: Iterable[str] | None = None) -> list[Path]:
        """All simple ``src -> dst`` paths, lexicographic by arc-id sequence.

        ``within`` restricts the usable arcs; ``avoiding`` removes arcs.
        Exponential in general; intended for networks of a few dozen vertices.
        """
        blocked = (self._allowed_only(within) if within is not None
                   else bytearray(len(self.arcs)))
        for k, bit in enumerate(self._blocked(avoiding)):
            if bit:
                blocked[k] = 1
        off, nbr, eid = self._cache["fwd"]
        vidx = self._cache["vidx"]
        arc_ids = self._cache["arc_ids"]
        raw = _kernels.simple_paths(off, nbr, eid, len(self.vertices),
                                    vidx[src], vidx[dst], blocked)
        out = []
        for seq in raw:
            arcs = tuple(arc_ids[k] for k in seq)
            out.append(Path((src,) + tuple(self.arcs[a][1] for a in arcs), arcs))
        return out

    def st_paths(self, s: int, h: int) -> list[Path]:
        """Cached simple paths from source ``s`` to sink ``h``."""
        key = ("st_paths", s, h)
        if key not in self._cache:
            self._cache[key] = self.paths_between(self.source(s), self.sink(h))
        return self._cache[key]


def _csr(n, frm, to):
    order = sorted(range(len(frm)), key=lambda k: (frm[k], k))
    offsets = array("i", [0] * (n + 1))
    for k in frm:
        offsets[k + 1] += 1
    for v in range(n):
        offsets[v + 1] += offsets[v]
    nbr = array("i", (to[k] for k in order))
    eid = array("i", order)
    return offsets, nbr, eid


# --- validation --------------------------------------------------------------

def structure_violations(vertices, arcs, capacities, pairs) -> list[str]:
    """Every violated standing assumption, each naming the offender."""
    problems = []
    vset = set(vertices)
    if len(vset) != len(list(vertices)):
        problems.append("duplicate vertex id")
    seen_pairs = {}
    for a in sorted(arcs):
        t, h = arcs[a]
        for end in (t, h):
            if end not in vset:
                problems.append(f"unknown vertex: arc {a} endpoint {end}")
        if t == h:
            problems.append(f"self-loop: arc {a} at {t}")
        if (t, h) in seen_pairs:
            problems.append(f"duplicate arc: {a} repeats {t}->{h} (also {seen_pairs[t, h]})")
        seen_pairs.setdefault((t, h), a)
    for a in sorted(arcs):
        if a not in capacities:
            problems.append(f"missing capacity: arc {a}")
            continue
        cap = capacities[a]
        if not is_inf(cap) and not cap > 0:
            problems.append(f"capacity must be positive: arc {a}")
    if problems:
        return problems

    out_of = {v: [] for v in vset}
    into = {v: [] for v in vset}
    for a, (t, h) in arcs.items():
        out_of[t].append(a)
        into[h].append(a)

    if not pairs:
        problems.append("no source-sink pairs")
    srcs = [s for s, _ in pairs]
    snks = [t for _, t in pairs]
    for k, (s, t) in enumerate(pairs, start=1):
        for end in (s, t):
            if end not in vset:
                problems.append(f"unknown vertex: pair {k} endpoint {end}")
    if problems:
        return problems
    if len(set(srcs)) != len(srcs):
        problems.append("sources are not distinct")
    if len(set(snks)) != len(snks):
        problems.append("sinks are not distinct")
    for v in sorted(set(srcs) & set(snks)):
        problems.append(f"source is also a sink: vertex {v}")
    for k, s in enumerate(srcs, start=1):
        if into[s]:
            problems.append(f"source has in-arc: pair {k} source {s} arc {sorted(into[s])[0]}")
        if len(out_of[s]) != 1:
            problems.append(f"source needs exactly one out-arc: pair {k} source {s} has {len(out_of[s])}")
        for a in out_of[s]:
            if not is_inf(capacities[a]):
                problems.append(f"source arc must be infinite: pair {k} arc {a}")
    for k, t in enumerate(snks, start=1):
        if out_of[t]:
            problems.append(f"sink has out-arc: pair {k} sink {t} arc {sorted(out_of[t])[0]}")
        if len(into[t]) != 1:
            problems.append(f"sink needs exactly one in-arc: pair {k} sink {t} has {len(into[t])}")

    # undirected connectivity
    if vset:
        start = min(vset)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for a in out_of[v]:
                w = arcs[a][1]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
            for a in into[v]:
                w = arcs[a][0]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != vset:
            missing = sorted(vset - seen)
            problems.append(f"not connected: {missing[0]} unreachable from {start} (undirected)")

    for k, (s, t) in enumerate(pairs, start=1):
        reached = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for a in out_of[v]:
                w = arcs[a][1]
                if w not in reached:
                    reached.add(w)
                    stack.append(w)
        if t not in reached:
            problems.append(f"sink unreachable: pair {k} sink {t} from source {s}")
    return problems


def validate_structure(vertices, arcs, capacities, pairs) -> Network:
    """Check the standing assumptions and build a :class:`Network`.

    ``arcs`` maps arc id -> (tail, head); ``capacities`` maps arc id to a
    positive rational (anything ``Fraction`` accepts) or ``"inf"``/``INF``.
    Raises :class:`StructureError` listing every violation.
    """
    arcs = {str(a): (str(t), str(h)) for a, (t, h) in dict(arcs).items()}
    caps = {}
    bad = []
    for a, v in dict(capacities).items():
        try:
            caps[str(a)] = as_capacity(v)
        except (ValueError, ZeroDivisionError):
            caps[str(a)] = Fraction(0)
    vertices = [str(v) for v in vertices]
    pairs = tuple((str(s), str(t)) for s, t in pairs)
    bad = structure_violations(vertices, arcs, caps, pairs)
    if bad:
        raise StructureError(bad)
    return Network(tuple(sorted(vertices)), arcs, caps, pairs)


# --- operations --------------------------------------------------------------

def _endpoint(net: Network, x, as_target: bool):
    if x in net.arcs:
        # reaching an arc means reaching its tail; leaving one starts at its head
        return net.tail(x) if as_target else net.head(x)
    if x in net._cache["vidx"]:
        return x
    raise KeyError(f"unknown vertex or arc: {x}")


def reachable(net: Network, frm, to, avoiding: Iterable[str] = ()) -> bool:
    """True iff a directed path leads from ``frm`` to ``to`` avoiding arcs.

    Arcs as endpoints: reaching arc ``b`` means reaching its tail; starting
    from arc ``a`` means starting at its head (having traversed ``a``).
    """
    avoiding = set(avoiding)
    for a in avoiding:
        if a not in net.arcs:
            raise KeyError(f"unknown arc: {a}")
    src = _endpoint(net, frm, as_target=False)
    dst = _endpoint(net, to, as_target=True)
    if frm in net.arcs and frm in avoiding:
        return False
    return dst in net.reach_from([src], avoiding)


def _check_index(net: Network, i: int):
    if not 1 <= i <= net.n:
        raise IndexError(f"pair index {i} outside 1..{net.n}")


def enumerate_i_paths(net: Network, i: int) -> list[Path]:
    """All simple paths from source ``i`` to sink ``i`` (cached)."""
    _check_index(net, i)
    return net.st_paths(i, i)


def bundle(net: Network, J: Iterable[int]) -> Subgraph:
    """Vertices and arcs lying on some ``j``-path, ``j`` in ``J``."""
    J = frozenset(J)
    key = ("bundle", J)
    if key not in net._cache:
        vs, arcs = set(), set()
        for j in J:
            for p in enumerate_i_paths(net, j):
                vs.update(p.vertices)
                arcs.update(p.arcs)
        net._cache[key] = Subgraph(frozenset(vs), frozenset(arcs))
    return net._cache[key]


def boundary_arcs(net: Network, U: Iterable[str], direction: str = "out") -> frozenset:
    """OUT(U) (tail in U, head outside) or IN(U) for ``direction='in'``."""
    U = set(U)
    if direction == "out":
        return frozenset(a for a, (t, h) in net.arcs.items() if t in U and h not in U)
    if direction == "in":
        return frozenset(a for a, (t, h) in net.arcs.items() if h in U and t not in U)
    raise ValueError("direction must be 'out' or 'in'")
