"""Fourier–Motzkin elimination, kept independent of the double-description code.

To dualize C = cone(g_1..g_m) we describe C as the projection of
{(x, c) : x = Σ c_j g_j, c ≥ 0} and eliminate c. Equalities are used first by
Gaussian substitution; the remaining c-variables are eliminated by pairing
inequalities of opposite sign, pruned with Chernikov's rule. The surviving
homogeneous constraints ⟨f, x⟩ ≥ 0 (and ⟨e, x⟩ = 0) generate the dual cone.

Only the lattice helpers are shared with the rest of the package; no LP and no
double description are used here.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .lattice import IntVector, primitive


def _scale_to_primitive(row: Sequence[Fraction]) -> IntVector | None:
    return primitive(row) if any(row) else None


def fm_inequalities(generators: Sequence[Sequence[int]], d: int) -> tuple[list[IntVector], list[IntVector]]:
    """(inequalities, equalities) on x describing cone(generators) ⊂ Q^d.

    x lies in the cone iff ⟨f, x⟩ ≥ 0 for each inequality f and ⟨e, x⟩ = 0
    for each equality e.
    """
    m = len(generators)
    nvar = d + m
    # equalities: x_i - Σ_j g_j[i] c_j = 0
    eqs: list[list[Fraction]] = []
    for i in range(d):
        row = [Fraction(0)] * nvar
        row[i] = Fraction(1)
        for j, g in enumerate(generators):
            row[d + j] = Fraction(-g[i])
        eqs.append(row)
    # inequalities with their Chernikov history sets
    ineqs: list[tuple[list[Fraction], frozenset[int]]] = []
    for j in range(m):
        row = [Fraction(0)] * nvar
        row[d + j] = Fraction(1)
        ineqs.append((row, frozenset([j])))

    # Gaussian substitution of c-variables through the equalities
    remaining_eqs = []
    while eqs:
        e = eqs.pop()
        p = next((k for k in range(d, nvar) if e[k] != 0), None)
        if p is None:
            remaining_eqs.append(e)
            continue
        piv = e[p]

        def sub(r):
            if r[p] == 0:
                return r
            f = r[p] / piv
            return [x - f * y for x, y in zip(r, e)]

        eqs = [sub(r) for r in eqs]
        remaining_eqs = [sub(r) for r in remaining_eqs]
        ineqs = [(sub(r), h) for r, h in ineqs]

    free = [k for k in range(d, nvar) if any(r[k] != 0 for r, _ in ineqs)]
    eliminated = 0
    for k in free:
        pos = [(r, h) for r, h in ineqs if r[k] > 0]
        neg = [(r, h) for r, h in ineqs if r[k] < 0]
        zer = [(r, h) for r, h in ineqs if r[k] == 0]
        eliminated += 1
        combined = []
        seen = set()
        for rp, hp in pos:
            for rn, hn in neg:
                h = hp | hn
                if len(h) > eliminated + 1:
                    continue
                a, b = rp[k], -rn[k]
                row = [b * x + a * y for x, y in zip(rp, rn)]
                key = _scale_to_primitive(row)
                if key is None or key in seen:
                    continue
                seen.add(key)
                combined.append(([Fraction(x) for x in key], h))
        # drop rows whose history strictly contains another's (further Chernikov pruning)
        rows = zer + combined
        keep = []
        for i, (r, h) in enumerate(rows):
            if any(h2 < h for j, (_, h2) in enumerate(rows) if j != i):
                continue
            keep.append((r, h))
        ineqs = keep

    out_ineq = set()
    for r, _ in ineqs:
        v = _scale_to_primitive(r[:d])
        if v is not None:
            out_ineq.add(v)
    out_eq = set()
    for r in remaining_eqs:
        v = _scale_to_primitive(r[:d])
        if v is not None:
            out_eq.add(v)
    return sorted(out_ineq), sorted(out_eq)


def dual_generators_fm(generators: Sequence[Sequence[int]], d: int) -> list[IntVector]:
    """Generators of the dual of cone(generators), by Fourier–Motzkin."""
    ineq, eq = fm_inequalities([g for g in generators if any(g)], d)
    return ineq + eq + [tuple(-x for x in e) for e in eq]
