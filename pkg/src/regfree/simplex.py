"""Dense tableau simplex over exact rationals.

Solves  max c.x  s.t.  A x <= b,  x >= 0  with b >= 0, so the all-slack
basis is feasible and no phase one is needed.  Bland's rule precludes
cycling.  Returns the optimum together with the dual solution (read off
the slack columns), which is what the column-generation driver needs.

Everything is a Fraction; sizes here are small, exactness beats speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class Unbounded(Exception):
    pass


@dataclass
class LpSolution:
    value: Fraction
    x: list[Fraction]
    duals: list[Fraction]  # one per row


def solve_max(A, b, c) -> LpSolution:
    m = len(A)
    n = len(c)
    if any(bi < 0 for bi in b):
        raise ValueError("need b >= 0 for the slack basis to be feasible")
    zero = Fraction(0)
    # columns: 0..n-1 structural, n..n+m-1 slack; last column is b
    tab = [
        [Fraction(A[i][j]) for j in range(n)]
        + [Fraction(1) if r == i else zero for r in range(m)]
        + [Fraction(b[i])]
        for i in range(m)
    ]
    # objective row holds reduced costs of a max problem (pivot until <= 0)
    obj = [Fraction(c[j]) for j in range(n)] + [zero] * m + [zero]
    basis = list(range(n, n + m))

    while True:
        # Bland: entering = lowest-index column with positive reduced cost
        enter = next((j for j in range(n + m) if obj[j] > 0), None)
        if enter is None:
            break
        # ratio test; Bland tie-break on lowest basis variable
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave is None:
            raise Unbounded
        piv = tab[leave][enter]
        row = tab[leave]
        tab[leave] = [v / piv for v in row]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * p for a, p in zip(tab[i], tab[leave])]
        f = obj[enter]
        obj = [a - f * p for a, p in zip(obj, tab[leave])]
        basis[leave] = enter

    x = [zero] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = tab[i][-1]
    value = sum(Fraction(c[j]) * x[j] for j in range(n))
    # dual value of row i = negated reduced cost of its slack column
    duals = [-obj[n + i] for i in range(m)]
    return LpSolution(value=value, x=x, duals=duals)
