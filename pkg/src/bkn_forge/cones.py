"""Exact rational polyhedral cones.

A cone is stored in canonical form: a basis of its lineality space L (saturated,
Hermite-reduced) listed with both signs, plus the primitive extreme rays of its
projection to the orthogonal complement of L. Generators are sorted
lexicographically, so equal cones have equal canonical forms.

Duals are computed by double description; ``fm.dual_generators_fm`` is an
independent Fourier–Motzkin implementation used as a cross-check.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .lattice import (
    IntMatrix,
    IntVector,
    dot,
    hermite_normal_form,
    primitive,
    rational_solve,
    saturation,
)
from .linprog import in_cone

MAX_HILBERT_RANK = 6


@dataclass(frozen=True)
class RationalCone:
    ambient_rank: int
    generators: tuple[IntVector, ...]
    lineality: tuple[IntVector, ...] = ()

    @cached_property
    def facets(self) -> tuple[IntVector, ...]:
        """Generators of the dual cone: v ∈ C iff ⟨f, v⟩ ≥ 0 for every f listed."""
        return dual_cone(self).generators

    @property
    def dimension(self) -> int:
        from .lattice import rank
        return rank(self.generators, self.ambient_rank)

    def __contains__(self, v: Sequence) -> bool:
        return contains(self, v)


def _project_away(v: Sequence, basis: Sequence[IntVector]) -> tuple[Fraction, ...]:
    """Orthogonal projection of v onto the complement of span(basis)."""
    if not basis:
        return tuple(Fraction(x) for x in v)
    gram = [[dot(a, b) for b in basis] for a in basis]
    coeffs = rational_solve(gram, [dot(a, v) for a in basis])
    return tuple(Fraction(x) - sum(c * a[k] for c, a in zip(coeffs, basis)) for k, x in enumerate(v))


def _lineality_basis(gens: Sequence[IntVector], d: int) -> list[IntVector]:
    lines = [g for g in gens if in_cone(gens, tuple(-x for x in g)) is not None]
    if not lines:
        return []
    sat = saturation(lines, d)
    return [tuple(r) for r in hermite_normal_form(IntMatrix.from_rows(sat, d)).tolist()]


def cone_from_generators(vs: Sequence[Sequence], ambient_rank: int) -> RationalCone:
    """Canonical cone generated by the given rational vectors."""
    d = ambient_rank
    gens = set()
    for v in vs:
        if len(v) != d:
            raise ValueError(f"vector {tuple(v)} does not have {d} coordinates")
        if any(v):
            gens.add(primitive(v))
    gens = sorted(gens)
    lin = _lineality_basis(gens, d)
    pointed = set()
    for g in gens:
        p = _project_away(g, lin)
        if any(p):
            pointed.add(primitive(p))
    rays = sorted(pointed)
    keep = list(rays)
    for g in rays:
        others = [h for h in keep if h != g]
        if in_cone(others, g) is not None:
            keep = others
    out = set(keep) | set(lin) | {tuple(-x for x in l) for l in lin}
    return RationalCone(d, tuple(sorted(out)), tuple(lin))


def zero_cone(d: int) -> RationalCone:
    return RationalCone(d, (), ())


def contains(C: RationalCone, v: Sequence) -> bool:
    if len(v) != C.ambient_rank:
        raise ValueError("dimension mismatch")
    return in_cone(C.generators, v) is not None


def cone_witness(C: RationalCone, v: Sequence) -> tuple[Fraction, ...] | None:
    """Nonnegative coefficients on C.generators reproducing v, or None."""
    return in_cone(C.generators, v)


def is_strictly_convex(C: RationalCone) -> bool:
    return not C.lineality


# ---------------------------------------------------------------------------
# double description

def _dd_dual(constraints: Sequence[IntVector], d: int) -> list[IntVector]:
    """Generators of {u : ⟨a, u⟩ ≥ 0 for all constraints a}.

    Incremental double description: keeps a lineality basis and the extreme
    rays of the pointed part; adjacency is decided combinatorially from the
    sets of tight constraints.
    """
    lin: list[IntVector] = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    rays: list[IntVector] = []
    done: list[IntVector] = []
    for a in constraints:
        k = next((k for k, l in enumerate(lin) if dot(a, l) != 0), None)
        if k is not None:
            pivot = lin.pop(k)
            s = dot(a, pivot)
            if s < 0:
                pivot, s = tuple(-x for x in pivot), -s
            lin = [primitive([s * x - dot(a, l) * y for x, y in zip(l, pivot)]) if dot(a, l) else l
                   for l in lin]
            rays = [primitive([s * x - dot(a, r) * y for x, y in zip(r, pivot)]) if dot(a, r) else r
                    for r in rays]
            rays = [r for r in rays if any(r)]
            rays.append(primitive(pivot))
            done.append(a)
            continue
        done.append(a)
        vals = [dot(a, r) for r in rays]
        pos = [r for r, v in zip(rays, vals) if v > 0]
        neg = [r for r, v in zip(rays, vals) if v < 0]
        zer = [r for r, v in zip(rays, vals) if v == 0]
        if not neg:
            continue
        zsets = {r: frozenset(k for k, c in enumerate(done[:-1]) if dot(c, r) == 0) for r in rays}
        new = []
        for p in pos:
            for n in neg:
                common = zsets[p] & zsets[n]
                if any(r != p and r != n and common <= zsets[r] for r in rays):
                    continue
                ap, an = dot(a, p), dot(a, n)
                new.append(primitive([ap * x - an * y for x, y in zip(n, p)]))
        rays = pos + zer + [r for r in new if any(r)]
        rays = list(dict.fromkeys(rays))
    out = list(rays)
    for l in lin:
        out.append(l)
        out.append(tuple(-x for x in l))
    return out


def dual_cone(C: RationalCone) -> RationalCone:
    """{u : ⟨u, v⟩ ≥ 0 for all v ∈ C}."""
    d = C.ambient_rank
    return cone_from_generators(_dd_dual(C.generators, d), d)


# ---------------------------------------------------------------------------
# equality

@dataclass(frozen=True)
class ConeEqualityCertificate:
    """For each generator of one cone, nonnegative coefficients on the other's generators."""

    forward: tuple[tuple[IntVector, tuple[Fraction, ...]], ...]
    backward: tuple[tuple[IntVector, tuple[Fraction, ...]], ...]

    def check(self, A: RationalCone, B: RationalCone) -> bool:
        """Recombine every witness exactly."""
        def ok(pairs, src, dst):
            if {t for t, _ in pairs} != set(src.generators):
                return False
            for target, coeffs in pairs:
                if len(coeffs) != len(dst.generators) or any(c < 0 for c in coeffs):
                    return False
                combo = [sum((c * g[k] for c, g in zip(coeffs, dst.generators)), Fraction(0))
                         for k in range(dst.ambient_rank)]
                if tuple(combo) != tuple(target):
                    return False
            return True

        return ok(self.forward, A, B) and ok(self.backward, B, A)


@dataclass(frozen=True)
class ConeComparison:
    equal: bool
    certificate: ConeEqualityCertificate | None = None
    separating_vector: IntVector | None = None
    separating_side: str | None = None  # which cone contains the separating vector

    def __bool__(self) -> bool:
        return self.equal


def cones_equal(A: RationalCone, B: RationalCone) -> ConeComparison:
    """Semantic equality by mutual containment of generators, with exact witnesses."""
    if A.ambient_rank != B.ambient_rank:
        raise ValueError("ambient ranks differ")
    fwd, bwd = [], []
    for g in A.generators:
        w = in_cone(B.generators, g)
        if w is None:
            return ConeComparison(False, None, g, "first")
        fwd.append((g, w))
    for g in B.generators:
        w = in_cone(A.generators, g)
        if w is None:
            return ConeComparison(False, None, g, "second")
        bwd.append((g, w))
    return ConeComparison(True, ConeEqualityCertificate(tuple(fwd), tuple(bwd)))


# ---------------------------------------------------------------------------
# lattice points

def hilbert_basis(C: RationalCone, sublattice: Sequence[Sequence[int]] | None = None) -> tuple[IntVector, ...]:
    """Minimal generating set of the monoid C ∩ L (L = Z^d, or the span of ``sublattice``).

    Works in basis coordinates of L. Candidates are lattice points of C below
    a strictly positive functional f bounded by the sum of the d largest values
    of f on the generators (every irreducible lies in a fundamental
    parallelepiped of a simplicial subcone); they are scanned by increasing f.
    """
    d = C.ambient_rank
    if d > MAX_HILBERT_RANK:
        raise ValueError(f"Hilbert basis limited to ambient rank <= {MAX_HILBERT_RANK}")
    if not is_strictly_convex(C):
        raise ValueError("Hilbert basis needs a strictly convex cone")
    if not C.generators:
        return ()
    if sublattice is None:
        basis = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    else:
        basis = [tuple(v) for v in sublattice]
        if len(basis) != d:
            raise ValueError("sublattice must have full rank")
    cols = [[b[k] for b in basis] for k in range(d)]
    coord_gens = []
    for g in C.generators:
        x = rational_solve(cols, g)
        if x is None:
            raise ValueError("sublattice does not span the cone")
        coord_gens.append(primitive(x))
    K = cone_from_generators(coord_gens, d)
    facets = K.facets
    f = tuple(sum(col) for col in zip(*facets))
    fvals = sorted((dot(f, g) for g in K.generators), reverse=True)
    dim = K.dimension
    bound = sum(fvals[:dim])
    lo = [sum(min(0, g[k]) for g in K.generators) for k in range(d)]
    hi = [sum(max(0, g[k]) for g in K.generators) for k in range(d)]
    cands = []
    for x in itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        if not any(x):
            continue
        fx = dot(f, x)
        if fx <= 0 or fx > bound:
            continue
        if all(dot(h, x) >= 0 for h in facets):
            cands.append((fx, x))
    cands.sort()
    hb: list[IntVector] = []
    for _, x in cands:
        if not any(all(dot(h, tuple(a - b for a, b in zip(x, y))) >= 0 for h in facets) for y in hb):
            hb.append(x)
    out = [tuple(sum(c * b[k] for c, b in zip(x, basis)) for k in range(d)) for x in hb]
    return tuple(sorted(out))
