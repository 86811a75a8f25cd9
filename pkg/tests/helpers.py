"""Shared generators and brute-force oracles for the test suite."""

import itertools
import random
from fractions import Fraction

from structroute.graph import INF, StructureError, validate_structure

CAP_CHOICES = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3, 2), INF)


def random_network(seed, max_vertices=10, max_pairs=3, inf_share=0.15, sink_inf=True):
    """Seeded random valid network with at most ``max_vertices`` vertices."""
    rnd = random.Random(seed)
    while True:
        n = rnd.randint(1, max_pairs)
        m = rnd.randint(2, max_vertices - 2 * n)
        if m < 1:
            continue
        core = [f"x{k}" for k in range(m)]
        arcs = {}
        # random spanning tree keeps the core connected
        for k in range(1, m):
            j = rnd.randrange(k)
            t, h = (core[j], core[k]) if rnd.random() < 0.5 else (core[k], core[j])
            arcs[f"a{len(arcs)}"] = (t, h)
        density = rnd.uniform(0.1, 0.5)
        for t, h in itertools.permutations(core, 2):
            if (t, h) not in arcs.values() and rnd.random() < density:
                arcs[f"a{len(arcs)}"] = (t, h)
        caps = {a: (INF if rnd.random() < inf_share else rnd.choice(CAP_CHOICES[:4])) for a in arcs}
        reach = _reach_table(core, arcs)
        options = [(a, b) for a in core for b in core if b in reach[a]]
        vertices = list(core)
        pairs = []
        for k in range(1, n + 1):
            a, b = rnd.choice(options)
            s, t = f"sigma{k}", f"tau{k}"
            vertices += [s, t]
            arcs[f"out{k}"] = (s, a)
            arcs[f"in{k}"] = (b, t)
            caps[f"out{k}"] = INF
            caps[f"in{k}"] = INF if sink_inf else rnd.choice(CAP_CHOICES)
            pairs.append((s, t))
        try:
            return validate_structure(vertices, arcs, caps, pairs)
        except StructureError:  # pragma: no cover - generator only emits valid ones
            continue


def _reach_table(core, arcs):
    out = {v: [] for v in core}
    for t, h in arcs.values():
        out[t].append(h)
    table = {}
    for v in core:
        seen, stack = {v}, [v]
        while stack:
            for w in out[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        table[v] = seen
    return table


def subsets(items, max_size=None):
    items = list(items)
    top = len(items) if max_size is None else max_size
    for r in range(top + 1):
        for c in itertools.combinations(items, r):
            yield frozenset(c)


# --- brute-force oracles ----------------------------------------------------

def oracle_walk_exists(net, i, C):
    """Bypassing indirect i-walk by explicit search over source sequences.

    Legs are simple paths avoiding C; junctions must reach the sink in the
    full graph. Sources are not repeated (a repeat can always be cut out).
    """
    C = set(C)
    sink = net.sink(i)
    others = [s for s in net.sources if s != net.source(i)]
    to_sink = net.reach_to([sink])

    def ends(s):
        return {p.end for v in net.vertices for p in net.paths_between(s, v, avoiding=C)[:1]}

    reach = {s: ends(s) for s in net.sources}
    for r in range(len(others) + 1):
        for seq in itertools.permutations(others, r):
            chain = (net.source(i),) + seq
            ok = all(reach[a] & reach[b] & to_sink for a, b in zip(chain, chain[1:]))
            if ok and sink in reach[chain[-1]]:
                return True
    return False


def oracle_sdom(net, B):
    """Least arc set containing B closed under the three rules, by fixpoint."""
    C = set(B)
    sources = net.sources
    changed = True
    while changed:
        changed = False
        for a in net.arc_ids:
            if a in C:
                continue
            add = False
            term = net.terminal_arc_pairs.get(a)
            if term is not None:
                i, side = term
                partner = net.sink_arc(i) if side == "out" else net.source_arc(i)
                add = partner in C or not oracle_walk_exists(net, i, C)
            if not add:
                tail = net.tail(a)
                add = not any(net.paths_between(s, tail, avoiding=C) for s in sources)
            if add:
                C.add(a)
                changed = True
    return frozenset(C)
