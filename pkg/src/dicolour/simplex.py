"""Exact simplex on integer data using fraction-free (integer) pivoting.

The tableau holds integers ``T`` and a positive common denominator ``det``;
the represented tableau is ``T / det``.  A pivot on ``(r, s)`` replaces every
row ``i != r`` by ``(p * T[i] - T[i][s] * T[r]) / det`` with ``p = T[r][s]``,
which is always an exact integer division, then sets ``det = p``.  Pivoting
uses Bland's smallest-index rule in both drivers, so neither can cycle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class Infeasible(ArithmeticError):
    pass


class Unbounded(ArithmeticError):
    pass


@dataclass
class LpOptimum:
    x: list[Fraction]        # structural variables
    duals: list[Fraction]    # one per constraint row, nonnegative
    objective: Fraction
    pivots: int


class _Tableau:
    def __init__(self, rows, basis):
        self.T = rows          # last row is the objective row, last column the rhs
        self.basis = basis
        self.det = 1
        self.pivots = 0

    def pivot(self, r, s):
        T, det = self.T, self.det
        row_r = T[r]
        p = row_r[s]
        for i, row in enumerate(T):
            if i == r:
                continue
            f = row[s]
            if f:
                T[i] = [(p * a - f * b) // det for a, b in zip(row, row_r)]
            else:
                T[i] = [p * a // det for a in row]
        if p < 0:
            for i, row in enumerate(T):
                T[i] = [-a for a in row]
            p = -p
        self.det = p
        self.basis[r] = s
        self.pivots += 1

    def value(self, i, j):
        return Fraction(self.T[i][j], self.det)


def covering_lp(A: list[list[int]], b: list[int], c: list[int]) -> LpOptimum:
    """Minimise ``c.x`` subject to ``A x >= b``, ``x >= 0``, with ``c >= 0``.

    Solved by the dual simplex method from the all-slack basis, which is dual
    feasible because ``c >= 0``.  ``duals`` are the optimal multipliers of the
    rows of ``A``.
    """
    m, N = len(A), len(c)
    if any(cj < 0 for cj in c):
        raise ValueError("covering_lp needs a nonnegative cost vector")
    width = N + m + 1
    rows = []
    for i in range(m):
        row = [-a for a in A[i]] + [0] * m + [-b[i]]
        row[N + i] = 1
        rows.append(row)
    rows.append(list(c) + [0] * m + [0])
    tab = _Tableau(rows, [N + i for i in range(m)])
    T = tab.T
    while True:
        leaving = [i for i in range(m) if T[i][-1] < 0]
        if not leaving:
            break
        r = min(leaving, key=lambda i: tab.basis[i])
        row_r, obj = T[r], T[m]
        s = None
        for j in range(width - 1):
            a = row_r[j]
            if a >= 0:
                continue
            # ratio obj[j] / -a, smallest wins, ties to the smaller index
            if s is None or obj[j] * -row_r[s] < obj[s] * -a:
                s = j
        if s is None:
            raise Infeasible("covering constraints cannot be met")
        tab.pivot(r, s)
        T = tab.T
    x = [Fraction(0)] * N
    for i, var in enumerate(tab.basis):
        if var < N:
            x[var] = tab.value(i, -1)
    duals = [tab.value(m, N + i) for i in range(m)]
    return LpOptimum(x, duals, -tab.value(m, -1), tab.pivots)


def packing_lp(A: list[list[int]], b: list[int], c: list[int]) -> LpOptimum:
    """Maximise ``c.y`` subject to ``A y <= b``, ``y >= 0``, with ``b >= 0``.

    Primal simplex from the all-slack basis.  ``duals`` are the optimal
    multipliers of the rows of ``A``.
    """
    m, N = len(A), len(c)
    if any(bi < 0 for bi in b):
        raise ValueError("packing_lp needs a nonnegative right-hand side")
    rows = []
    for i in range(m):
        row = list(A[i]) + [0] * m + [b[i]]
        row[N + i] = 1
        rows.append(row)
    rows.append([-cj for cj in c] + [0] * m + [0])
    tab = _Tableau(rows, [N + i for i in range(m)])
    T = tab.T
    while True:
        obj = T[m]
        s = next((j for j in range(N + m) if obj[j] < 0), None)
        if s is None:
            break
        r = None
        for i in range(m):
            a = T[i][s]
            if a <= 0:
                continue
            if r is None:
                r = i
                continue
            lhs, rhs = T[i][-1] * T[r][s], T[r][-1] * a
            if lhs < rhs or (lhs == rhs and tab.basis[i] < tab.basis[r]):
                r = i
        if r is None:
            raise Unbounded("objective is unbounded")
        tab.pivot(r, s)
        T = tab.T
    y = [Fraction(0)] * N
    for i, var in enumerate(tab.basis):
        if var < N:
            y[var] = tab.value(i, -1)
    duals = [tab.value(m, N + i) for i in range(m)]
    return LpOptimum(y, duals, tab.value(m, -1), tab.pivots)
