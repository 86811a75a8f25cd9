"""Downward dominance and its cascade of simpler sufficient conditions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cuts import (
    ViableCut,
    enumerate_viable_i_cuts,
    in_D_i,
    is_J_disjoint,
    source_augmented,
)
from .dominance import find_bypassing_ii_walk, sdom
from .graph import Network, bundle

LEVELS = ("l43", "l42", "l41", "full")
LEVEL_NAMES = {"l43": "Lemma 4.3", "l42": "Lemma 4.2", "l41": "Lemma 4.1",
               "full": "downward dominance"}
MAX_ORDER_SEARCH = 8


class SearchTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Witness:
    """Where a check failed: pair ``i``, cut ``U``, its outgoing arcs, why."""

    pair: int
    cut: frozenset
    outgoing: frozenset
    reason: str


@dataclass(frozen=True)
class CheckResult:
    holds: bool
    witness: Witness | None = None

    def __bool__(self):
        return self.holds


@dataclass
class RoutabilityReport:
    dominated: bool
    order: tuple[int, ...] | None
    certified_by: str | None  # one of LEVELS, or None
    witness: Witness | None
    lemmas: dict = field(default_factory=dict)  # level -> bool (checked ones)

    @property
    def verdict(self) -> str:
        if not self.dominated:
            return "not downward dominated"
        if self.certified_by == "full":
            return "downward dominated"
        return f"certified by {LEVEL_NAMES[self.certified_by]}"


def _cuts_by_outgoing(net: Network, i: int) -> list[ViableCut]:
    # conditions depend only on the outgoing set; keep the first cut for each
    seen, out = set(), []
    for c in enumerate_viable_i_cuts(net, i):
        if c.outgoing not in seen:
            seen.add(c.outgoing)
            out.append(c)
    return out


def _touches(net: Network, O, h) -> bool:
    return not O.isdisjoint(bundle(net, (h,)).arcs)


def _all_paths_hit(net: Network, s: int, h: int, O) -> tuple[bool, bool]:
    """(every sigma_s -> tau_h path meets O, some path meets O)."""
    hits = [bool(O & set(p.arcs)) for p in net.st_paths(s, h)]
    return all(hits), any(hits)


def check_downward_dominance(net: Network) -> CheckResult:
    """Full check over every viable i-cut, i >= 2, in the given pair order."""
    for i in range(2, net.n + 1):
        for cut in _cuts_by_outgoing(net, i):
            O = cut.outgoing
            if not in_D_i(net, O, i - 1):
                return CheckResult(False, Witness(i, cut.vertices, O, "outgoing set not in D_{i-1}"))
            if net.source_arc(i) not in sdom(net, source_augmented(net, O, i)):
                return CheckResult(False, Witness(
                    i, cut.vertices, O, "augmented outgoing set does not dominate the source arc"))
    return CheckResult(True)


def check_lemma_4_3(net: Network) -> CheckResult:
    """Single outgoing arc per viable cut plus all-or-nothing source-sink paths."""
    for i in range(2, net.n + 1):
        for cut in _cuts_by_outgoing(net, i):
            O = cut.outgoing
            if len(O) != 1:
                return CheckResult(False, Witness(i, cut.vertices, O, "outgoing set is not a single arc"))
            for h in range(1, i + 1):
                if not _touches(net, O, h):
                    continue
                for s in range(1, h + 1):
                    if not _touches(net, O, s):
                        continue
                    every, some = _all_paths_hit(net, s, h, O)
                    if some and not every:
                        return CheckResult(False, Witness(
                            i, cut.vertices, O, f"paths {s}->{h} split on the outgoing arc"))
    return CheckResult(True)


def check_lemma_4_2(net: Network) -> CheckResult:
    """Disjointness plus: every sigma_s -> tau_h path meets the outgoing set."""
    for i in range(2, net.n + 1):
        for cut in _cuts_by_outgoing(net, i):
            O = cut.outgoing
            if not is_J_disjoint(net, O, range(1, i)):
                return CheckResult(False, Witness(i, cut.vertices, O, "outgoing set not [1:i-1]-disjoint"))
            for h in range(1, i + 1):
                if not _touches(net, O, h):
                    continue
                for s in range(1, h + 1):
                    if not _touches(net, O, s):
                        continue
                    every, _ = _all_paths_hit(net, s, h, O)
                    if not every:
                        return CheckResult(False, Witness(
                            i, cut.vertices, O, f"a path {s}->{h} avoids the outgoing set"))
    return CheckResult(True)


def check_lemma_4_1(net: Network) -> CheckResult:
    """Disjointness plus: all indirect h-walks meet the augmented set."""
    for i in range(2, net.n + 1):
        for cut in _cuts_by_outgoing(net, i):
            O = cut.outgoing
            if not is_J_disjoint(net, O, range(1, i)):
                return CheckResult(False, Witness(i, cut.vertices, O, "outgoing set not [1:i-1]-disjoint"))
            for h in range(1, i + 1):
                if not _touches(net, O, h):
                    continue
                walk = find_bypassing_ii_walk(net, h, source_augmented(net, O, h))
                if walk is not None:
                    return CheckResult(False, Witness(
                        i, cut.vertices, O, f"indirect {h}-walk bypasses the augmented set"))
    return CheckResult(True)


CHECKS = {
    "l43": check_lemma_4_3,
    "l42": check_lemma_4_2,
    "l41": check_lemma_4_1,
    "full": check_downward_dominance,
}


def analyze(net: Network, level: str = "auto") -> RoutabilityReport:
    """Run the cascade cheapest-first and report which check certified.

    ``level='auto'`` stops at the first certifying check (the full check is
    conclusive either way). A named level runs that check alone; a failure
    there only means that sufficient condition does not apply, unless the
    level is ``'full'``.
    """
    order = tuple(range(1, net.n + 1))
    levels = LEVELS if level == "auto" else (level,)
    if level != "auto" and level not in CHECKS:
        raise ValueError(f"unknown level {level!r}")
    outcomes = {}
    witness = None
    for lv in levels:
        res = CHECKS[lv](net)
        outcomes[lv] = res.holds
        if res.holds:
            return RoutabilityReport(True, order, lv, None, outcomes)
        witness = res.witness
    return RoutabilityReport(False, order, None, witness, outcomes)


def find_dd_ordering(net: Network, level: str = "auto",
                     max_pairs: int = MAX_ORDER_SEARCH) -> tuple[int, ...] | None:
    """First pair ordering (lexicographic) under which the network is certified."""
    if net.n > max_pairs:
        raise SearchTooLarge(f"search too large: {net.n} pairs exceeds the limit of {max_pairs}")
    for perm in itertools.permutations(range(1, net.n + 1)):
        if analyze(net.reordered(perm), level).dominated:
            return perm
    return None


def analyze_orderings(net: Network, level: str = "auto",
                      max_pairs: int = MAX_ORDER_SEARCH) -> RoutabilityReport:
    """Like :func:`analyze` but over every ordering; ``order`` is the first
    certified one. The failure witness refers to the given order."""
    if net.n > max_pairs:
        raise SearchTooLarge(f"search too large: {net.n} pairs exceeds the limit of {max_pairs}")
    first = None
    for perm in itertools.permutations(range(1, net.n + 1)):
        rep = analyze(net.reordered(perm), level)
        if first is None:
            first = rep
        if rep.dominated:
            rep.order = perm
            return rep
    first.order = None
    return first
