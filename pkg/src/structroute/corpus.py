"""Named example networks and generator families.

Greek arc names are spelled out in ASCII: alpha, beta, gamma, delta,
epsilon, phi, chi, rho. Every source ``sigma<i>`` feeds its attachment
vertex through arc ``out<i>`` (infinite capacity) and every sink ``tau<i>``
is fed through ``in<i>`` (infinite capacity unless overridden). Internal
arcs default to capacity 1 and pair demands to 1.

The Okamura-Seymour variant is not included; its topology is not
recoverable from a description. Supply your own file for it.
"""

from __future__ import annotations

from fractions import Fraction

from .graph import INF, Network, validate_structure
from .netfile import emit_network


class CorpusError(ValueError):
    pass


def _assemble(internal, internal_arcs, attach, cap=1, sink_cap="inf", demands=None):
    """``internal_arcs``: {id: (tail, head)}; ``attach``: [(src vertex, dst vertex)]."""
    vertices = list(internal)
    arcs = dict(internal_arcs)
    caps = {a: Fraction(cap) for a in internal_arcs}
    pairs = []
    for k, (a, b) in enumerate(attach, start=1):
        for v in (a, b):
            if v not in internal:
                raise CorpusError(f"pair {k}: unknown attachment vertex {v}")
        s, t = f"sigma{k}", f"tau{k}"
        vertices += [s, t]
        arcs[f"out{k}"] = (s, a)
        arcs[f"in{k}"] = (b, t)
        caps[f"out{k}"] = INF
        caps[f"in{k}"] = INF if str(sink_cap) == "inf" else Fraction(sink_cap)
        pairs.append((s, t))
    if demands is None:
        demands = [Fraction(1)] * len(pairs)
    demands = tuple(Fraction(d) for d in demands)
    if len(demands) != len(pairs):
        raise CorpusError("one demand per pair required")
    net = validate_structure(vertices, arcs, caps, pairs)
    return net, demands


def butterfly(**kw):
    internal = ["s1", "s2", "a", "b", "t1", "t2"]
    arcs = {
        "delta": ("s1", "a"), "phi": ("s2", "a"), "alpha": ("a", "b"),
        "beta": ("b", "t1"), "gamma": ("b", "t2"),
        "epsilon": ("s1", "t2"), "chi": ("s2", "t1"),
    }
    return _assemble(internal, arcs, [("s1", "t1"), ("s2", "t2")], **kw)


def fig5(**kw):
    internal = ["a", "b", "d", "e"]
    arcs = {"alpha": ("b", "a"), "beta": ("a", "d"), "gamma": ("b", "d"), "epsilon": ("d", "e")}
    return _assemble(internal, arcs, [("a", "e"), ("b", "d")], **kw)


def fig6(**kw):
    internal = ["s", "u", "v", "w"]
    arcs = {"epsilon": ("s", "u"), "beta": ("u", "v"), "gamma": ("v", "w"),
            "phi": ("u", "w"), "rho": ("v", "u")}
    return _assemble(internal, arcs, [("s", "v"), ("u", "w")], **kw)


def _vname(x):
    x = str(x)
    return f"v{x}" if x.isdigit() else x


def _pairs_param(pairs, default):
    if pairs is None:
        pairs = default
    if isinstance(pairs, str):
        pairs = [p.split(":") for p in pairs.split(",") if p]
    if any(len(p) != 2 for p in pairs):
        raise CorpusError("pairs must look like a:b,c:d")
    return [(_vname(a), _vname(b)) for a, b in pairs]


def line(k=4, pairs=None, **kw):
    """Directed line v0 -> v1 -> ... -> v{k-1}."""
    k = int(k)
    internal = [f"v{j}" for j in range(k)]
    arcs = {f"e{j}": (f"v{j}", f"v{j + 1}") for j in range(k - 1)}
    return _assemble(internal, arcs, _pairs_param(pairs, [(0, k - 1)]), **kw)


def cycle(k=4, pairs=None, **kw):
    """Directed cycle v0 -> ... -> v{k-1} -> v0."""
    k = int(k)
    internal = [f"v{j}" for j in range(k)]
    arcs = {f"e{j}": (f"v{j}", f"v{(j + 1) % k}") for j in range(k)} if k > 1 else {}
    return _assemble(internal, arcs, _pairs_param(pairs, [(0, k - 1)]), **kw)


def tree(arcs="0>1,0>2,2>3,4>2", pairs=None, **kw):
    """Oriented tree; ``arcs`` lists ``a>b`` (arc a -> b) over indices."""
    if isinstance(arcs, str):
        arcs = [tuple(x.split(">")) for x in arcs.split(",") if x]
    names = sorted({_vname(v) for ab in arcs for v in ab}, key=lambda s: (len(s), s))
    internal_arcs = {f"e{j}": (_vname(a), _vname(b)) for j, (a, b) in enumerate(arcs)}
    if len(internal_arcs) != len(names) - 1:
        raise CorpusError("tree needs exactly |V| - 1 arcs")
    return _assemble(names, internal_arcs, _pairs_param(pairs, [(0, 3)]), **kw)


def tree_of_cycles(cycles="3,3,4", attach="0.1,0.2", pairs=None, **kw):
    """Directed cycles joined at gateway vertices.

    ``cycles`` gives each cycle's length; ``attach`` gives, for cycles 1.., the
    ``parent.position`` vertex that the cycle's position 0 coincides with.
    Vertices are named ``c<cycle>v<position>`` (a gateway keeps its parent name).
    """
    if isinstance(cycles, str):
        cycles = [int(x) for x in cycles.split(",") if x]
    if isinstance(attach, str):
        attach = [tuple(int(y) for y in x.split(".")) for x in attach.split(",") if x]
    if len(attach) != len(cycles) - 1:
        raise CorpusError("attach needs one entry per cycle after the first")
    name = {}
    internal = []
    arcs = {}
    for c, size in enumerate(cycles):
        if size < 2:
            raise CorpusError("cycles need at least 2 vertices")
        for p in range(size):
            if c > 0 and p == 0:
                pc, pp = attach[c - 1]
                if pc >= c or (pc, pp) not in name:
                    raise CorpusError(f"cycle {c}: bad attachment {pc}.{pp}")
                name[c, p] = name[pc, pp]
            else:
                name[c, p] = f"c{c}v{p}"
                internal.append(name[c, p])
        for p in range(size):
            arcs[f"c{c}e{p}"] = (name[c, p], name[c, (p + 1) % size])
    default = [(internal[0], internal[-1])]
    return _assemble(internal, arcs, _pairs_param(pairs, default), **kw)


GENERATORS = {
    "butterfly": butterfly,
    "fig5": fig5,
    "fig6": fig6,
    "line": line,
    "cycle": cycle,
    "tree": tree,
    "tree_of_cycles": tree_of_cycles,
}


def _split_params(params):
    kw = {}
    for p in params or ():
        if "=" not in p:
            raise CorpusError(f"parameter must be key=value: {p!r}")
        k, v = p.split("=", 1)
        kw[k] = v
    if "demands" in kw and isinstance(kw["demands"], str):
        kw["demands"] = kw["demands"].split(",")
    return kw


def build(name, params=()) -> tuple[Network, tuple]:
    """``(network, demands)`` for a named instance; params are ``key=value``."""
    if name not in GENERATORS:
        raise CorpusError(f"unknown corpus instance {name!r}; known: {', '.join(GENERATORS)}")
    kw = _split_params(params) if not isinstance(params, dict) else dict(params)
    try:
        return GENERATORS[name](**kw)
    except TypeError as exc:
        raise CorpusError(f"bad parameters for {name}: {exc}") from None


def corpus(name, params=()) -> str:
    """Network-file text for a named instance."""
    net, demands = build(name, params)
    return emit_network(net, demands)


# default instances used by the acceptance and property suites
DEFAULT_INSTANCES = (
    ("butterfly", ()),
    ("fig5", ()),
    ("fig6", ()),
    ("line", ("k=5", "pairs=0:3,1:4")),
    ("cycle", ("k=5", "pairs=0:2,3:1")),
    ("tree", ("arcs=0>1,0>2,2>3,4>2", "pairs=0:3,4:3")),
    ("tree_of_cycles", ("cycles=3,3,4", "attach=0.1,0.2", "pairs=c0v0:c2v3,c1v1:c0v2")),
)
