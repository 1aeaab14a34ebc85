"""Exact phase-one simplex over the rationals.

Decides whether ``A x = b, x >= 0`` is feasible. On success it returns a basic
feasible solution; otherwise it returns a Farkas vector ``v`` with
``v^T A >= 0`` and ``v^T b < 0``. Bland's rule keeps it finite.
"""
from __future__ import annotations

from fractions import Fraction


def phase_one(A: list[list[Fraction]], b: list[Fraction]):
    """Return ``(x, None)`` if feasible, ``(None, v)`` otherwise."""
    m = len(A)
    n = len(A[0]) if m else 0
    sign = [(-1 if bi < 0 else 1) for bi in b]
    # tableau rows: [A' | I | b']
    rows = []
    for i in range(m):
        s = sign[i]
        row = [s * Fraction(a) for a in A[i]]
        row += [Fraction(1 if k == i else 0) for k in range(m)]
        row.append(s * Fraction(b[i]))
        rows.append(row)
    basis = [n + i for i in range(m)]
    width = n + m + 1
    # reduced costs for cost vector (0..0, 1..1); last entry is -objective
    red = [Fraction(0)] * width
    for j in range(n):
        red[j] = -sum((rows[i][j] for i in range(m)), Fraction(0))
    red[-1] = -sum((rows[i][-1] for i in range(m)), Fraction(0))

    while True:
        enter = next((j for j in range(n + m) if red[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # cannot happen: phase one is bounded below by 0
            raise RuntimeError("unbounded phase-one problem")
        piv = rows[leave][enter]
        prow = [v / piv for v in rows[leave]]
        rows[leave] = prow
        for i in range(m):
            if i != leave and rows[i][enter]:
                f = rows[i][enter]
                rows[i] = [v - f * p for v, p in zip(rows[i], prow)]
        if red[enter]:
            f = red[enter]
            red = [v - f * p for v, p in zip(red, prow)]
        basis[leave] = enter

    optimum = -red[-1]
    if optimum == 0:
        x = [Fraction(0)] * n
        for i, j in enumerate(basis):
            if j < n:
                x[j] = rows[i][-1]
        return x, None
    # duals of the flipped system: w_i = cost_i - red_i = 1 - red[n + i]
    w = [1 - red[n + i] for i in range(m)]
    v = [-sign[i] * w[i] for i in range(m)]
    return None, v
