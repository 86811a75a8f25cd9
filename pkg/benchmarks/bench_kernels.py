"""Compare the compiled and pure-Python graph kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times ``reach`` on a random sparse digraph and ``simple_paths`` on a grid
DAG (every monotone lattice path), then an end-to-end placement sweep run
once per backend in a subprocess.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from structroute import _kernels
from structroute.graph import validate_structure

SWEEP = """
import time
from structroute import BACKEND
from structroute.corpus import build
from structroute.sweep import PlacementSweep, core_of
net, _ = build("cycle", {"k": 6})
t = time.perf_counter()
PlacementSweep(core_of(net)).run(3)
print(BACKEND, time.perf_counter() - t)
"""


def grid_network(w, h):
    name = lambda x, y: f"g{x}_{y}"
    vertices = [name(x, y) for x in range(w) for y in range(h)] + ["sigma1", "tau1"]
    arcs = {}
    for x in range(w):
        for y in range(h):
            if x + 1 < w:
                arcs[f"r{x}_{y}"] = (name(x, y), name(x + 1, y))
            if y + 1 < h:
                arcs[f"d{x}_{y}"] = (name(x, y), name(x, y + 1))
    arcs["out1"] = ("sigma1", name(0, 0))
    arcs["in1"] = (name(w - 1, h - 1), "tau1")
    caps = {a: 1 for a in arcs}
    caps["out1"] = caps["in1"] = float("inf")
    return validate_structure(vertices, arcs, caps, [("sigma1", "tau1")])


def random_network(n, m, seed=0):
    rnd = random.Random(seed)
    core = [f"v{k}" for k in range(n)]
    arcs = {f"t{k}": (core[k], core[k + 1]) for k in range(n - 1)}
    while len(arcs) < m:
        a, b = rnd.sample(core, 2)
        if (a, b) not in arcs.values():
            arcs[f"x{len(arcs)}"] = (a, b)
    arcs["out1"] = ("sigma1", core[0])
    arcs["in1"] = (core[-1], "tau1")
    caps = {a: 1 for a in arcs}
    caps["out1"] = caps["in1"] = float("inf")
    return validate_structure(core + ["sigma1", "tau1"], arcs, caps, [("sigma1", "tau1")])


def kernel_args(net):
    c = net._cache
    off, nbr, eid = c["fwd"]
    return off, nbr, eid, len(net.vertices), c["vidx"]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    big = random_network(2000, 8000)
    grid = grid_network(7, 7)
    cases = []
    off, nbr, eid, n, vidx = kernel_args(big)
    blocked = bytearray(len(big.arcs))
    cases.append(("reach (2000 v, 8000 a)",
                  lambda k: k.reach(off, nbr, eid, n, [vidx["sigma1"]], blocked), 20))
    goff, gnbr, geid, gn, gvidx = kernel_args(grid)
    gblocked = bytearray(len(grid.arcs))
    cases.append(("simple_paths (7x7 grid, 924 paths)",
                  lambda k: k.simple_paths(goff, gnbr, geid, gn, gvidx["sigma1"], gvidx["tau1"],
                                           gblocked), 5))

    found = _kernels.backends()
    print(f"backends available: {', '.join(found)}")
    print(f"{'kernel':38} " + " ".join(f"{b:>12}" for b in found) + "   speedup")
    for label, fn, number in cases:
        times = {b: min(timeit.repeat(lambda: fn(mod), number=number, repeat=args.repeat)) / number
                 for b, mod in found.items()}
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{label:38} " + " ".join(f"{times[b] * 1e3:10.3f}ms" for b in found)
              + f"   {speed:6.1f}x")

    print("end-to-end placement sweep, cycle(6), up to 3 pairs:")
    for forced in (False, True):
        env = dict(os.environ)
        env.pop("STRUCTROUTE_PURE_PYTHON", None)
        if forced:
            env["STRUCTROUTE_PURE_PYTHON"] = "1"
        out = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True,
                             text=True, check=True).stdout.split()
        print(f"  {out[0]:8} {float(out[1]):.2f}s")


if __name__ == "__main__":
    main()
