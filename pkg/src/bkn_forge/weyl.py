"""Weyl group actions and weights of irreducible highest-weight representations.

All functions act on the character lattice X of a based root datum: the
simple reflection s_i sends v to v - ⟨v, α_i∨⟩ α_i. To act on cocharacters,
pass ``dual_based(b)``.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .lattice import IntVector, dot
from .linprog import in_convex_hull
from .rootdata import BasedRootDatum

ORBIT_CAP = 10 ** 6


class OrbitTooLarge(RuntimeError):
    pass


def reflect(b: BasedRootDatum, i: int, v: Sequence[int]) -> IntVector:
    """Apply the i-th simple reflection (i indexes ``b.simple``)."""
    a, c = b.simple_roots[i], b.simple_coroots[i]
    p = dot(v, c)
    if p == 0:
        return tuple(v)
    return tuple(x - p * y for x, y in zip(v, a))


def weyl_orbit(b: BasedRootDatum, v: Sequence[int]) -> tuple[IntVector, ...]:
    """The W-orbit of v, by breadth-first closure under simple reflections; sorted."""
    start = tuple(v)
    seen = {start}
    queue = deque([start])
    l = len(b.simple)
    while queue:
        x = queue.popleft()
        for i in range(l):
            y = reflect(b, i, x)
            if y not in seen:
                seen.add(y)
                if len(seen) > ORBIT_CAP:
                    raise OrbitTooLarge(f"orbit of {start} exceeds {ORBIT_CAP} elements")
                queue.append(y)
    return tuple(sorted(seen))


def is_dominant(b: BasedRootDatum, v: Sequence[int]) -> bool:
    return all(dot(v, c) >= 0 for c in b.simple_coroots)


def dominant_representative(b: BasedRootDatum, v: Sequence[int]) -> tuple[IntVector, tuple[int, ...]]:
    """Dominant element of the orbit of v and the simple reflections applied (in order)."""
    x = tuple(v)
    word = []
    while True:
        for i, c in enumerate(b.simple_coroots):
            if dot(x, c) < 0:
                x = reflect(b, i, x)
                word.append(i)
                break
        else:
            return x, tuple(word)


@lru_cache(maxsize=None)
def longest_element_word(b: BasedRootDatum) -> tuple[int, ...]:
    """A reduced word for w₀ (rightmost letter applied first).

    Obtained by driving the regular dominant vector 2δ (sum of positive roots)
    to its negative, reflecting at a positive pairing each step.
    """
    two_delta = tuple(sum(col) for col in zip(*b.positive_roots)) if b.positive else (0,) * b.rank
    x = two_delta
    word = []
    while True:
        for i, c in enumerate(b.simple_coroots):
            if dot(x, c) > 0:
                x = reflect(b, i, x)
                word.append(i)
                break
        else:
            break
    assert x == tuple(-t for t in two_delta)
    return tuple(word)


def longest_element_action(b: BasedRootDatum, v: Sequence[int]) -> IntVector:
    """w₀·v."""
    x = tuple(v)
    for i in longest_element_word(b):
        x = reflect(b, i, x)
    return x


def precedes(b: BasedRootDatum, mu: Sequence[int], lam: Sequence[int]) -> bool:
    """μ ⪯ λ: λ - μ is a nonnegative integer combination of simple roots."""
    diff = tuple(x - y for x, y in zip(lam, mu))
    try:
        coeffs = b.simple_coordinates(diff)
    except ValueError:
        return False
    return all(c.denominator == 1 and c >= 0 for c in coeffs)


def _require_dominant(b: BasedRootDatum, lam: Sequence[int]) -> IntVector:
    lam = tuple(lam)
    if len(lam) != b.rank:
        raise ValueError(f"weight {lam} does not have {b.rank} coordinates")
    if not is_dominant(b, lam):
        raise ValueError(f"weight {lam} is not dominant")
    return lam


@lru_cache(maxsize=None)
def _irrep_weights(b: BasedRootDatum, lam: IntVector) -> tuple[IntVector, ...]:
    vertices = weyl_orbit(b, lam)
    inside = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for a in b.simple_roots:
            nu = tuple(x - y for x, y in zip(mu, a))
            if nu in inside:
                continue
            if in_convex_hull(vertices, nu) is not None:
                inside.add(nu)
                queue.append(nu)
    dominant = [mu for mu in inside if is_dominant(b, mu)]
    closure = set()
    for mu in dominant:
        closure.update(weyl_orbit(b, mu))
    if closure != inside:
        raise AssertionError("weight set is not the W-closure of its dominant part")
    return tuple(sorted(closure))


def irrep_weight_set(b: BasedRootDatum, lam: Sequence[int]) -> tuple[IntVector, ...]:
    """Weights of the irreducible representation with highest weight λ (no multiplicities).

    These are the points of λ + ZΦ inside conv(Wλ). Every dominant one lies
    below λ, so they are reached from λ by subtracting simple roots while
    staying in the hull (exact LP over the orbit vertices).
    """
    return _irrep_weights(b, _require_dominant(b, lam))


def invariant_form(b: BasedRootDatum, x: Sequence, y: Sequence) -> Fraction:
    """W-invariant form B(x, y) = Σ_α ⟨x, α∨⟩⟨y, α∨⟩ over all roots."""
    return sum((Fraction(dot(x, c)) * dot(y, c) for c in b.datum.coroots), Fraction(0))


def half_sum_positive(b: BasedRootDatum) -> tuple[Fraction, ...]:
    if not b.positive:
        return (Fraction(0),) * b.rank
    return tuple(Fraction(sum(col), 2) for col in zip(*b.positive_roots))


@lru_cache(maxsize=None)
def _multiplicities(b: BasedRootDatum, lam: IntVector) -> dict[IntVector, int]:
    weights = _irrep_weights(b, lam)
    delta = half_sum_positive(b)

    def depth(mu):
        return sum(b.simple_coordinates(tuple(x - y for x, y in zip(lam, mu))))

    lam_d = tuple(x + d for x, d in zip(lam, delta))
    top = invariant_form(b, lam_d, lam_d)
    mult: dict[IntVector, int] = {}
    wset = set(weights)
    for mu in sorted(weights, key=depth):
        if mu == lam:
            mult[mu] = 1
            continue
        mu_d = tuple(x + d for x, d in zip(mu, delta))
        denom = top - invariant_form(b, mu_d, mu_d)
        total = Fraction(0)
        for a in b.positive_roots:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a))
                if nu not in wset:
                    break
                total += mult[nu] * invariant_form(b, nu, a)
                k += 1
        m = 2 * total / denom
        if m.denominator != 1 or m <= 0:
            raise AssertionError(f"Freudenthal recursion gave {m} at {mu}")
        mult[mu] = int(m)
    return mult


def weight_multiplicities(b: BasedRootDatum, lam: Sequence[int]) -> dict[IntVector, int]:
    """All weight multiplicities of the irreducible representation V(λ)."""
    return dict(_multiplicities(b, _require_dominant(b, lam)))


def freudenthal_multiplicity(b: BasedRootDatum, lam: Sequence[int], mu: Sequence[int]) -> int:
    """Multiplicity of μ in V(λ) by Freudenthal's recursion; 0 off the weight set."""
    return _multiplicities(b, _require_dominant(b, lam)).get(tuple(mu), 0)


def weyl_dimension(b: BasedRootDatum, lam: Sequence[int]) -> int:
    """∏_{α>0} ⟨λ+δ, α∨⟩ / ⟨δ, α∨⟩."""
    lam = _require_dominant(b, lam)
    delta = half_sum_positive(b)
    num = den = Fraction(1)
    for c in b.positive_coroots:
        num *= dot(lam, c) + dot(delta, c)
        den *= dot(delta, c)
    d = num / den
    if d.denominator != 1:
        raise AssertionError(f"non-integral Weyl dimension {d}")
    return int(d)
