"""Two-phase primal simplex over exact rationals with Bland's rule.

Solves ``min c.x  s.t.  A x = b, x >= 0``. Dense tableau; meant for the few
hundred variables that desk-scale flow problems produce.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: list | None
    objective: Fraction | None
    infeasibility: Fraction  # phase-one optimum; > 0 certifies infeasibility
    pivots: int


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows      # list of lists of Fraction
        self.rhs = rhs
        self.basis = basis    # basis[r] = column index basic in row r
        self.pivots = 0

    def pivot(self, r, j):
        row = self.rows[r]
        p = row[j]
        if p != 1:
            inv = 1 / p
            self.rows[r] = row = [v * inv if v else ZERO for v in row]
            self.rhs[r] *= inv
        nz = [k for k, v in enumerate(row) if v]
        for q, other in enumerate(self.rows):
            if q == r:
                continue
            f = other[j]
            if f:
                for k in nz:
                    other[k] -= f * row[k]
                self.rhs[q] -= f * self.rhs[r]
        self.basis[r] = j
        self.pivots += 1

    def reduced_costs(self, cost):
        red = list(cost)
        obj = ZERO
        for r, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[r]
                for k, v in enumerate(row):
                    if v:
                        red[k] -= cb * v
                obj += cb * self.rhs[r]
        return red, obj

    def optimize(self, cost, allowed):
        """Bland's rule iterations; returns 'optimal' or 'unbounded'."""
        while True:
            red, _ = self.reduced_costs(cost)
            enter = next((j for j in allowed if red[j] < 0), None)
            if enter is None:
                return "optimal"
            best = None
            for r, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = self.rhs[r] / a
                    key = (ratio, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return "unbounded"
            self.pivot(best[1], enter)


def solve_lp(c, A, b) -> LPResult:
    """Minimise ``c.x`` subject to ``A x = b``, ``x >= 0`` exactly."""
    m = len(A)
    n = len(c)
    c = [Fraction(v) for v in c]
    rows, rhs = [], []
    for r in range(m):
        row = [Fraction(v) for v in A[r]]
        bb = Fraction(b[r])
        if bb < 0:
            row = [-v for v in row]
            bb = -bb
        rows.append(row + [Fraction(int(k == r)) for k in range(m)])
        rhs.append(bb)
    tab = _Tableau(rows, rhs, [n + r for r in range(m)])

    # phase one: drive the artificial columns to zero
    cost1 = [ZERO] * n + [Fraction(1)] * m
    tab.optimize(cost1, range(n + m))
    _, infeas = tab.reduced_costs(cost1)
    if infeas > 0:
        return LPResult("infeasible", None, None, infeas, tab.pivots)

    # pivot remaining artificials out; rows with no real entry are redundant
    r = 0
    while r < len(tab.rows):
        if tab.basis[r] >= n:
            j = next((k for k in range(n) if tab.rows[r][k]), None)
            if j is None:
                del tab.rows[r], tab.rhs[r], tab.basis[r]
                continue
            tab.pivot(r, j)
        r += 1
    for q in range(len(tab.rows)):
        del tab.rows[q][n:]

    status = tab.optimize(c, range(n))
    if status == "unbounded":
        return LPResult("unbounded", None, None, ZERO, tab.pivots)
    x = [ZERO] * n
    for q, j in enumerate(tab.basis):
        x[j] = tab.rhs[q]
    obj = sum((c[j] * x[j] for j in range(n)), ZERO)
    return LPResult("optimal", x, obj, ZERO, tab.pivots)
