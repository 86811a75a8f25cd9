"""Command-line front end.

Exit codes: 0 positive verdict or success, 1 negative verdict, 2 usage or
input error. FILE may also name a corpus instance (default parameters).
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import corpus as corpus_mod
from .codec import ReconstructionError, ScheduleError, Source, build_schedule, simulate
from .dominance import sdom
from .dot import export_dot
from .flows import sequential_construct, solve_mcf
from .netfile import NetworkFileError, format_rational, parse_network
from .routability import LEVELS, SearchTooLarge, analyze, analyze_orderings

GREEK = {"α": "alpha", "β": "beta", "γ": "gamma", "δ": "delta", "ε": "epsilon",
         "φ": "phi", "χ": "chi", "ρ": "rho"}


class UsageError(Exception):
    pass


def _fmt_set(xs) -> str:
    return "{" + ",".join(sorted(xs)) + "}"


def _load(where: str):
    if os.path.exists(where):
        with open(where, encoding="utf-8") as fh:
            text = fh.read()
    elif where in corpus_mod.GENERATORS:
        text = corpus_mod.corpus(where)
    else:
        raise UsageError(f"no such file or corpus instance: {where}")
    return parse_network(text)


def _ids(raw: str | None, known, what: str) -> list[str]:
    if not raw:
        return []
    out = []
    for tok in raw.split(","):
        tok = tok.strip()
        tok = tok if tok in known else GREEK.get(tok, tok)
        if tok not in known:
            raise UsageError(f"unknown {what}: {tok}")
        out.append(tok)
    return out


def _order(raw: str | None, n: int):
    if raw is None:
        return None
    try:
        order = tuple(int(x) for x in raw.split(","))
    except ValueError:
        raise UsageError(f"bad order: {raw}") from None
    if sorted(order) != list(range(1, n + 1)):
        raise UsageError(f"order must be a permutation of 1..{n}")
    return order


def _apply_order(net, demands, order):
    if order is None:
        return net, demands
    return net.reordered(order), tuple(demands[k - 1] for k in order)


def cmd_validate(args, out):
    net, _, demands = _load(args.file)
    out(f"valid vertices={len(net.vertices)} arcs={len(net.arcs)} pairs={net.n}")
    return 0


def cmd_analyze(args, out):
    net, _, demands = _load(args.file)
    order = _order(args.order, net.n)
    net, _ = _apply_order(net, demands, order)
    if args.search_orderings:
        rep = analyze_orderings(net, args.level)
    else:
        rep = analyze(net, args.level)
    given = order or tuple(range(1, net.n + 1))
    if rep.dominated:
        shown = tuple(given[k - 1] for k in rep.order)
        out(f"{rep.verdict}, order ({','.join(map(str, shown))})")
    elif args.search_orderings:
        out(f"{rep.verdict} under any ordering")
    else:
        out(f"{rep.verdict}, order ({','.join(map(str, given))})")
    for lv, ok in rep.lemmas.items():
        out(f"check {lv}={'pass' if ok else 'fail'}")
    w = rep.witness
    if w is not None and not rep.dominated:
        out(f"witness: pair {given[w.pair - 1]}, U={_fmt_set(w.cut)}, "
            f"O{given[w.pair - 1]}={_fmt_set(w.outgoing)}, reason: {w.reason}")
    return 0 if rep.dominated else 1


def cmd_sdom(args, out):
    net, _, _ = _load(args.file)
    B = _ids(args.arcs, net.arcs, "arc")
    out(_fmt_set(sdom(net, B)))
    return 0


def _print_flow(net, flow, out):
    for a in net.arc_ids:
        vals = [flow.get(a, j) for j in range(1, net.n + 1)]
        if any(vals):
            out(f"flow {a} " + " ".join(format_rational(v) for v in vals))


def cmd_flow(args, out):
    net, caps, demands = _load(args.file)
    res = solve_mcf(net, demands, caps, strict=args.strict)
    if not res.feasible:
        out(f"infeasible (phase-1 residual {format_rational(res.infeasibility)})")
        return 1
    ok = res.strictly_feasible if args.strict else True
    label = "strictly feasible" if res.strictly_feasible else "feasible"
    out(label if ok else "feasible but not strictly feasible")
    if args.strict:
        out(f"slack {format_rational(res.slack)}")
    _print_flow(net, res.flow, out)
    return 0 if ok else 1


def cmd_construct(args, out):
    net, caps, demands = _load(args.file)
    order = _order(args.order, net.n)
    net, demands = _apply_order(net, demands, order)
    given = order or tuple(range(1, net.n + 1))
    res = sequential_construct(net, demands, caps)
    for s in res.steps:
        if s.case == 1:
            out(f"step pair {given[s.pair - 1]}: case 1 (infinite path)")
        else:
            out(f"step pair {given[s.pair - 1]}: case 2 max-flow {format_rational(s.value)}"
                f" cut O={_fmt_set(s.outgoing or ())}")
    if not res.ok:
        p = given[res.failed_pair - 1]
        out(f"failed at pair {p}, U={_fmt_set(res.cut)}, O{p}={_fmt_set(res.outgoing)}")
        return 1
    out("success")
    _print_flow(net, res.flow, out)
    return 0


def cmd_simulate(args, out):
    net, caps, demands = _load(args.file)
    res = solve_mcf(net, demands, caps, strict=True)
    if not res.feasible:
        out("infeasible: no routing flow for these demands")
        return 1
    sources = [Source.uniform_for_rate(h) for h in demands]
    try:
        sched = build_schedule(net, res.flow, sources, m=args.m, capacities=caps)
        rep = simulate(sched, args.blocks, args.seed)
    except ScheduleError as exc:
        out(f"error: {exc}")
        return 1
    except ReconstructionError as exc:  # pragma: no cover - would be a bug
        out(f"reconstruction failed: {exc}")
        return 1
    out(rep.to_text().rstrip("\n"))
    return 0 if rep.ok else 1


def cmd_export_dot(args, out):
    net, caps, _ = _load(args.file)
    ha = _ids(args.highlight_arcs, net.arcs, "arc")
    hv = _ids(args.highlight_vertices, set(net.vertices), "vertex")
    out(export_dot(net, ha, hv, caps).rstrip("\n"))
    return 0


def cmd_corpus(args, out):
    out(corpus_mod.corpus(args.name, args.params).rstrip("\n"))
    return 0


def _positive_int(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="structroute", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a network file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", help="downward dominance verdict")
    s.add_argument("file")
    s.add_argument("--order", help="pair order, e.g. 2,1")
    s.add_argument("--search-orderings", action="store_true")
    s.add_argument("--level", choices=("auto",) + LEVELS, default="auto")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sdom", help="structural dominance closure of an arc set")
    s.add_argument("file")
    s.add_argument("--arcs", required=True, help="comma-separated arc ids")
    s.set_defaults(func=cmd_sdom)

    s = sub.add_parser("flow", help="multicommodity flow feasibility")
    s.add_argument("file")
    s.add_argument("--strict", action="store_true", help="require slack on every finite arc")
    s.set_defaults(func=cmd_flow)

    s = sub.add_parser("construct", help="pair-by-pair flow construction")
    s.add_argument("file")
    s.add_argument("--order")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("simulate", help="simulate block routing with uniform sources")
    s.add_argument("file")
    s.add_argument("--blocks", type=_positive_int, default=1000)
    s.add_argument("--m", type=_positive_int, default=None, help="block length in steps")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("export-dot", help="Graphviz output")
    s.add_argument("file")
    s.add_argument("--highlight-arcs")
    s.add_argument("--highlight-vertices")
    s.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("corpus", help="emit a named example network")
    s.add_argument("name")
    s.add_argument("params", nargs="*", help="key=value parameters")
    s.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0

    def out(line):
        print(line)

    try:
        return args.func(args, out)
    except NetworkFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if args.command == "validate" and exc.lineno == 0:
            print("invalid")
            return 1
        return 2
    except (UsageError, corpus_mod.CorpusError, SearchTooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
