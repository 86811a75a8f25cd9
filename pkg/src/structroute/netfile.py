"""Line-oriented network file format.

::

    # comment
    vertex <id>
    arc <id> <tail> <head> <cap>      # cap: integer, p/q or inf
    pair <source> <sink> <demand>     # line order = pair order

Arc ids in the corpus use ASCII names for Greek letters (alpha, beta, ...).
"""

from __future__ import annotations

from fractions import Fraction

from .graph import INF, Network, StructureError, is_inf, validate_structure


class NetworkFileError(ValueError):
    """Parse error; ``lineno`` is 1-based (0 for whole-file problems)."""

    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        self.message = message
        super().__init__(f"line {lineno}: {message}" if lineno else message)


def _rational(tok: str, lineno: int, what: str) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise NetworkFileError(lineno, f"bad {what} {tok!r}") from None


def format_rational(x) -> str:
    if is_inf(x):
        return "inf"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_network(text: str) -> tuple[Network, dict, tuple[Fraction, ...]]:
    """Parse a network file into ``(network, capacities, demands)``."""
    vertices, arcs, caps, pairs, demands = [], {}, {}, [], []
    declared = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kind = tok[0]
        if kind == "vertex":
            if len(tok) != 2:
                raise NetworkFileError(lineno, "expected: vertex <id>")
            if tok[1] in declared:
                raise NetworkFileError(lineno, f"duplicate vertex {tok[1]}")
            declared.add(tok[1])
            vertices.append(tok[1])
        elif kind == "arc":
            if len(tok) != 5:
                raise NetworkFileError(lineno, "expected: arc <id> <tail> <head> <cap>")
            a, t, h, c = tok[1:]
            if a in arcs:
                raise NetworkFileError(lineno, f"duplicate arc id {a}")
            for v in (t, h):
                if v not in declared:
                    raise NetworkFileError(lineno, f"undeclared vertex {v}")
            if c.lower() == "inf":
                cap = INF
            else:
                cap = _rational(c, lineno, "capacity")
                if cap <= 0:
                    raise NetworkFileError(lineno, "capacity must be positive")
            arcs[a] = (t, h)
            caps[a] = cap
        elif kind == "pair":
            if len(tok) != 4:
                raise NetworkFileError(lineno, "expected: pair <source> <sink> <demand>")
            for v in tok[1:3]:
                if v not in declared:
                    raise NetworkFileError(lineno, f"undeclared vertex {v}")
            d = _rational(tok[3], lineno, "demand")
            if d <= 0:
                raise NetworkFileError(lineno, "demand must be positive")
            pairs.append((tok[1], tok[2]))
            demands.append(d)
        else:
            raise NetworkFileError(lineno, f"unknown directive {kind!r}")
    try:
        net = validate_structure(vertices, arcs, caps, pairs)
    except StructureError as exc:
        raise NetworkFileError(0, "invalid structure: " + "; ".join(exc.violations)) from None
    return net, dict(net.capacities), tuple(demands)


def emit_network(net: Network, demands, capacities=None, header: str | None = None) -> str:
    """Canonical text: vertices and arcs sorted by id, pairs in order."""
    caps = dict(net.capacities)
    if capacities:
        caps.update(capacities)
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.extend(f"vertex {v}" for v in net.vertices)
    for a in net.arc_ids:
        t, h = net.arcs[a]
        lines.append(f"arc {a} {t} {h} {format_rational(caps[a])}")
    for (s, t), d in zip(net.pairs, demands):
        lines.append(f"pair {s} {t} {format_rational(d)}")
    return "\n".join(lines) + "\n"


def load_network(path):
    with open(path, encoding="utf-8") as fh:
        return parse_network(fh.read())
