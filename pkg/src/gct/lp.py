"""Two-phase simplex over Fractions with Bland's rule.

Solves  max c.x  subject to  A x <= b,  E x = f,  and x >= 0 on the
variables flagged nonnegative (the rest are free and split internally).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None = None
    point: tuple[Fraction, ...] | None = None


def _pivot(rows: list[list[Fraction]], obj: list[Fraction], r: int, c: int) -> None:
    prow = rows[r]
    inv = 1 / prow[c]
    if inv != 1:
        prow = [x * inv for x in prow]
        rows[r] = prow
    nz = [j for j, x in enumerate(prow) if x]
    for i, row in enumerate(rows):
        if i != r:
            f = row[c]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
    f = obj[c]
    if f:
        for j in nz:
            obj[j] -= f * prow[j]


def _run(rows, obj, basis, allowed) -> str:
    """Minimize; obj holds reduced costs with obj[-1] = -(current value)."""
    while True:
        enter = next((j for j in allowed if obj[j] < 0), None)
        if enter is None:
            return OPTIMAL
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return UNBOUNDED
        r = best[1]
        _pivot(rows, obj, r, enter)
        basis[r] = enter


def solve_lp(
    c: Sequence,
    a_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    a_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    nonneg: Sequence[bool] | bool = False,
    nvars: int | None = None,
) -> LPResult:
    n = nvars if nvars is not None else len(c)
    if isinstance(nonneg, bool):
        nonneg = [nonneg] * n
    # column map: each original variable -> (plus column, minus column or None)
    cols: list[tuple[int, int | None]] = []
    ncol = 0
    for j in range(n):
        if nonneg[j]:
            cols.append((ncol, None))
            ncol += 1
        else:
            cols.append((ncol, ncol + 1))
            ncol += 2

    def expand(row):
        out = [Fraction(0)] * ncol
        for j, x in enumerate(row):
            if x:
                p, m = cols[j]
                out[p] = Fraction(x)
                if m is not None:
                    out[m] = -Fraction(x)
        return out

    n_ub = len(a_ub)
    n_slack = n_ub
    width = ncol + n_slack
    rows: list[list[Fraction]] = []
    basis: list[int | None] = []
    for i, (row, rhs) in enumerate(zip(a_ub, b_ub)):
        r = expand(row) + [Fraction(0)] * n_slack
        r[ncol + i] = Fraction(1)
        r.append(Fraction(rhs))
        rows.append(r)
        basis.append(ncol + i)
    for row, rhs in zip(a_eq, b_eq):
        r = expand(row) + [Fraction(0)] * n_slack + [Fraction(rhs)]
        rows.append(r)
        basis.append(None)
    for i, r in enumerate(rows):
        if r[-1] < 0:
            rows[i] = [-x for x in r]
            basis[i] = None
    need = [i for i, b in enumerate(basis) if b is None]
    n_art = len(need)
    total = width + n_art
    for r in rows:
        rhs = r.pop()
        r.extend([Fraction(0)] * n_art)
        r.append(rhs)
    for k, i in enumerate(need):
        rows[i][width + k] = Fraction(1)
        basis[i] = width + k

    if n_art:
        obj = [Fraction(0)] * (total + 1)
        for k in range(n_art):
            obj[width + k] = Fraction(1)
        for i in need:
            obj = [o - x for o, x in zip(obj, rows[i])]
        _run(rows, obj, basis, range(total))
        if obj[-1] != 0:
            return LPResult(INFEASIBLE)
        # drive zero-level artificials out of the basis, dropping redundant rows
        i = 0
        while i < len(rows):
            if basis[i] >= width:
                j = next((j for j in range(width) if rows[i][j] != 0), None)
                if j is None:
                    del rows[i]
                    del basis[i]
                    continue
                _pivot(rows, obj, i, j)
                basis[i] = j
            i += 1
        rows = [r[:width] + [r[-1]] for r in rows]

    cost = [Fraction(0)] * (width + 1)
    for j, x in enumerate(c):
        if x:
            p, m = cols[j]
            cost[p] = -Fraction(x)
            if m is not None:
                cost[m] = Fraction(x)
    for i, b in enumerate(basis):
        f = cost[b]
        if f:
            cost = [o - f * x for o, x in zip(cost, rows[i])]
    status = _run(rows, cost, basis, range(width))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    y = [Fraction(0)] * width
    for i, b in enumerate(basis):
        y[b] = rows[i][-1]
    x = tuple(y[p] - (y[m] if m is not None else 0) for p, m in cols)
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult(OPTIMAL, value, x)
