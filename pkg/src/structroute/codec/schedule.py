"""Block routing schedules: path-flow split plus a per-pair Huffman block code."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, lcm, log2

from ..flows import MultiFlow, decompose_flow
from ..flows.model import capacities_of
from ..graph import Network, Path, is_inf
from .huffman import Codebook, entropy_bits, huffman_codebook

MAX_BLOCK_ALPHABET = 1 << 16


class ScheduleError(ValueError):
    pass


@dataclass(frozen=True)
class Source:
    """I.i.d. source emitting one symbol every ``period`` time steps."""

    alphabet: tuple
    probs: tuple
    period: int = 1

    def __post_init__(self):
        probs = tuple(Fraction(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if len(probs) != len(self.alphabet) or not probs:
            raise ValueError("alphabet and probabilities differ in length")
        if any(p <= 0 for p in probs) or sum(probs) != 1:
            raise ValueError("probabilities must be positive and sum to 1")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("repeated symbol")
        if self.period < 1:
            raise ValueError("period must be a positive integer")

    @property
    def entropy(self) -> float:
        """Bits per symbol."""
        return entropy_bits(self.probs)

    @property
    def rate(self) -> float:
        """Bits per time step."""
        return self.entropy / self.period

    @classmethod
    def uniform_for_rate(cls, rate) -> "Source":
        """Uniform source with entropy rate exactly ``p/q`` bits per step."""
        r = Fraction(rate)
        if r <= 0:
            raise ValueError("rate must be positive")
        size = 2 ** r.numerator
        return cls(tuple(range(size)), (Fraction(1, size),) * size, r.denominator)

    def block_distribution(self, symbols: int) -> dict:
        dist = {}
        for combo in product(range(len(self.alphabet)), repeat=symbols):
            p = Fraction(1)
            for k in combo:
                p *= self.probs[k]
            dist[tuple(self.alphabet[k] for k in combo)] = p
        return dist


@dataclass
class Route:
    path: Path
    rate: Fraction      # u: share of the pair's demand on this path

    @property
    def internal_arcs(self) -> tuple:
        # the source arc carries raw symbols, not code bits
        return self.path.arcs[1:]


@dataclass
class RoutingSchedule:
    net: Network
    m: int
    eps: Fraction
    demands: tuple                 # h_i = total path rate of pair i
    routes: dict                   # pair -> [Route]
    codebooks: dict                # pair -> Codebook over m/period-symbol blocks
    sources: tuple
    capacities: dict

    def symbols_per_block(self, i: int) -> int:
        return self.m // self.sources[i - 1].period

    def sub_block_lengths(self, i: int, total: int) -> list[int]:
        """``ceil(u_k / h_i * total)`` for every route of pair ``i``."""
        h = self.demands[i - 1]
        return [ceil(r.rate / h * total) for r in self.routes[i]]

    def arc_flow(self, arc) -> Fraction:
        return sum((r.rate for rs in self.routes.values() for r in rs
                    if arc in r.internal_arcs), Fraction(0))

    def sub_blocks_through(self, arc) -> int:
        return sum(1 for rs in self.routes.values() for r in rs if arc in r.internal_arcs)

    def overhead(self, arc) -> Fraction:
        """Extra bits per block on ``arc`` beyond ``m * flow``: Huffman's +1
        share plus one ceiling bit per crossing sub-block."""
        total = Fraction(0)
        for i, rs in self.routes.items():
            for r in rs:
                if arc in r.internal_arcs:
                    total += 1 + r.rate / self.demands[i - 1]
        return total

    def guaranteed_rate(self, arc) -> Fraction:
        return self.arc_flow(arc) + self.overhead(arc) / self.m


def _overheads(net, routes, demands):
    over = {}
    for i, rs in routes.items():
        for r in rs:
            for a in r.path.arcs[1:]:
                over[a] = over.get(a, Fraction(0)) + 1 + r.rate / demands[i - 1]
    return over


def build_schedule(net: Network, flow: MultiFlow, sources, eps=0, m: int | None = None,
                   capacities=None, max_block_alphabet: int = MAX_BLOCK_ALPHABET) -> RoutingSchedule:
    """Split each commodity into path rates and pick a block length.

    Cycle components of ``flow`` are dropped. When ``m`` is omitted the
    smallest multiple of every source period is chosen for which each finite
    arc satisfies ``flow + overhead/m + eps <= capacity``; an explicit ``m``
    bypasses that slack test.
    """
    caps = capacities_of(net, capacities)
    eps = Fraction(eps)
    sources = tuple(sources)
    if len(sources) != net.n:
        raise ScheduleError(f"expected {net.n} sources, got {len(sources)}")
    routes, demands = {}, []
    for i in range(1, net.n + 1):
        dec = decompose_flow(net, flow.commodity(i), i)
        routes[i] = [Route(p, u) for p, u in dec.paths]
        h = dec.value
        src = sources[i - 1]
        if h <= 0:
            raise ScheduleError(f"pair {i}: flow carries no rate")
        if src.entropy <= 0:
            raise ScheduleError(f"pair {i}: source entropy must be positive")
        if src.rate > float(h) + 1e-12:
            raise ScheduleError(f"pair {i}: source rate {src.rate:.6g} exceeds routed rate {h}")
        demands.append(h)
    demands = tuple(demands)

    step = lcm(*(s.period for s in sources))
    if m is None:
        over = _overheads(net, routes, demands)
        need = 1
        for a, o in sorted(over.items()):
            if is_inf(caps[a]):
                continue
            f = sum((r.rate for rs in routes.values() for r in rs if a in r.path.arcs), Fraction(0))
            slack = caps[a] - f - eps
            if slack <= 0:
                raise ScheduleError(
                    f"insufficient slack on {a}: capacity {caps[a]}, flow {f}, eps {eps}; "
                    f"need capacity above {f + eps}")
            need = max(need, ceil(o / slack))
        m = ceil(need / step) * step
    if m < 1 or m % step:
        raise ScheduleError(f"block length {m} must be a positive multiple of {step}")

    books = {}
    for i, src in enumerate(sources, 1):
        k = m // src.period
        if k * log2(len(src.alphabet)) > log2(max_block_alphabet):
            raise ScheduleError(
                f"pair {i}: block alphabet {len(src.alphabet)}**{k} exceeds {max_block_alphabet}")
        books[i] = huffman_codebook(src.block_distribution(k))
    return RoutingSchedule(net, m, eps, demands, routes, books, sources, caps)


def codebook_bound_holds(book: Codebook, symbols: int, entropy: float) -> bool:
    """E[L]/symbols <= H + 1/symbols, read off the codebook."""
    return float(book.expected_length) <= symbols * entropy + 1 + 1e-9
