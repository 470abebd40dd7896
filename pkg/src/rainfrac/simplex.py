"""Exact two-phase simplex over the rationals.

The tableau is kept integral with fraction-free (integer) pivoting: the
true tableau equals the stored integer matrix divided by a common
positive denominator, so every pivot is a handful of big-int products and
one exact division.  Entering and leaving variables follow Bland's rule,
which rules out cycling.

All variables are nonnegative.  Constraints are ``(coeffs, sense, rhs)``
with ``sense`` one of ``"<="``, ``">="``, ``"="``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPSolution:
    status: str
    value: Fraction | None
    x: tuple
    duals: tuple  # d(value)/d(rhs_i), one per constraint

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


def _row_scale(vals) -> int:
    return lcm(*(Fraction(v).denominator for v in vals)) if vals else 1


class _Tableau:
    def __init__(self, rows, zrows, basis):
        self.rows = rows
        self.z = zrows
        self.basis = basis
        self.den = 1

    def pivot(self, p: int, q: int) -> None:
        prow = self.rows[p]
        piv = prow[q]
        if piv < 0:
            prow = [-x for x in prow]
            self.rows[p] = prow
            piv = -piv
        den = self.den
        nz = [(j, y) for j, y in enumerate(prow) if y]
        for block in (self.rows, self.z):
            for i, row in enumerate(block):
                if row is prow:
                    continue
                f = row[q]
                if f:
                    new = [x * piv for x in row]
                    for j, y in nz:
                        new[j] -= f * y
                else:
                    new = [x * piv for x in row]
                if den != 1:
                    new = [x // den for x in new]
                block[i] = new
        self.den = piv
        self.basis[p] = q

    def run(self, zi: int, allowed) -> str:
        rows = self.rows
        while True:
            z = self.z[zi]
            q = next((j for j in allowed if z[j] < 0), None)
            if q is None:
                return OPTIMAL
            p = None
            for i, row in enumerate(rows):
                a = row[q]
                if a <= 0:
                    continue
                if p is None:
                    p = i
                    continue
                lhs = row[-1] * rows[p][q]
                rhs = rows[p][-1] * a
                if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[p]):
                    p = i
            if p is None:
                return UNBOUNDED
            self.pivot(p, q)


def solve(c: Sequence, constraints: Sequence, maximize: bool = True) -> LPSolution:
    """Optimize ``c . x`` over ``x >= 0`` subject to the given constraints."""
    n = len(c)
    c = [Fraction(v) for v in c]
    m = len(constraints)
    kinds, sign, scaled = [], [], []
    for coeffs, sense, rhs in constraints:
        if len(coeffs) != n:
            raise ValueError("constraint width does not match objective")
        coeffs = [Fraction(v) for v in coeffs]
        rhs = Fraction(rhs)
        s = 1
        if rhs < 0:
            s = -1
            sense = {"<=": ">=", ">=": "<=", "=": "="}[sense]
        k = _row_scale(coeffs + [rhs]) * s
        scaled.append(([int(v * k) for v in coeffs], int(rhs * k)))
        kinds.append(sense)
        sign.append(k)

    surplus = [i for i in range(m) if kinds[i] == ">="]
    ncol = n + len(surplus) + m
    art = [False] * ncol
    rows = []
    for i, (coeffs, rhs) in enumerate(scaled):
        row = coeffs + [0] * (len(surplus) + m) + [rhs]
        if kinds[i] == ">=":
            row[n + surplus.index(i)] = -1
        row[n + len(surplus) + i] = 1
        if kinds[i] != "<=":
            art[n + len(surplus) + i] = True
        rows.append(row)
    basis = [n + len(surplus) + i for i in range(m)]

    obj = c if maximize else [-v for v in c]
    c0 = _row_scale(obj)
    z2 = [-int(v * c0) for v in obj] + [0] * (ncol - n) + [0]
    z1 = [0] * (ncol + 1)
    for i, row in enumerate(rows):
        if art[basis[i]]:
            for j in range(ncol + 1):
                if j == ncol or not art[j]:
                    z1[j] -= row[j]
    tab = _Tableau(rows, [z1, z2], basis)

    if any(art):
        tab.run(0, range(ncol))
        if tab.z[0][-1] != 0:
            return LPSolution(INFEASIBLE, None, (), ())
        for i in range(m):
            if art[tab.basis[i]]:
                q = next((j for j in range(ncol) if not art[j] and tab.rows[i][j]), None)
                if q is not None:
                    tab.pivot(i, q)
    allowed = [j for j in range(ncol) if not art[j]]
    if tab.run(1, allowed) == UNBOUNDED:
        return LPSolution(UNBOUNDED, None, (), ())

    den = tab.den
    x = [Fraction(0)] * n
    for i, j in enumerate(tab.basis):
        if j < n:
            x[j] = Fraction(tab.rows[i][-1], den)
    z = tab.z[1]
    flip = 1 if maximize else -1
    value = Fraction(z[-1], den * c0) * flip
    duals = tuple(
        Fraction(z[n + len(surplus) + i] * sign[i], den * c0) * flip for i in range(m)
    )
    return LPSolution(OPTIMAL, value, tuple(x), duals)
