"""Exact feasibility LP: find x >= 0 with A x = b over the rationals.

Phase-one simplex on a dense Fraction tableau with Bland's rule, so it always
terminates. Sizes in this package are tiny (tens of columns, under ten rows).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def feasible_point(A: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """Return some x >= 0 with A x = b exactly, or None if there is none."""
    m = len(A)
    if len(b) != m:
        raise ValueError("A and b have different row counts")
    n = len(A[0]) if m else 0
    if m == 0:
        return tuple(Fraction(0) for _ in range(n))
    if n == 0:
        return () if all(x == 0 for x in b) else None

    # tableau rows: [a_1 .. a_n | art_1 .. art_m | rhs]
    T: list[list[Fraction]] = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        art = [Fraction(int(i == j)) for j in range(m)]
        T.append(row + art + [rhs])
    width = n + m
    basis = [n + i for i in range(m)]
    # phase-one objective: minimise the sum of artificials; reduced costs
    cost = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(width + 1):
            if j < n or j == width:
                cost[j] -= T[i][j]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][width] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # cannot happen in phase one (objective bounded below)
            break
        r = best[1]
        piv = T[r][enter]
        T[r] = [x / piv for x in T[r]]
        for i in range(m):
            if i != r and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[r])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, T[r])]
        basis[r] = enter

    if -cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = T[i][width]
        elif T[i][width] != 0:
            return None
    return tuple(x)


def in_cone(generators: Sequence[Sequence], v: Sequence) -> tuple[Fraction, ...] | None:
    """Nonnegative coefficients c with sum c_i g_i = v, or None."""
    d = len(v)
    if not generators:
        return () if all(x == 0 for x in v) else None
    A = [[g[k] for g in generators] for k in range(d)]
    return feasible_point(A, v)


def in_convex_hull(points: Sequence[Sequence], v: Sequence) -> tuple[Fraction, ...] | None:
    """Convex coefficients expressing v in conv(points), or None."""
    if not points:
        return None
    d = len(v)
    A = [[p[k] for p in points] for k in range(d)] + [[1] * len(points)]
    return feasible_point(A, list(v) + [1])
