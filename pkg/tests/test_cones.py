import functools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bkn_forge.cones import (
    RationalCone,
    cone_from_generators,
    cone_witness,
    cones_equal,
    dual_cone,
    hilbert_basis,
    is_strictly_convex,
    zero_cone,
)
from bkn_forge.fm import dual_generators_fm, fm_inequalities
from bkn_forge.lattice import dot
from bkn_forge.linprog import feasible_point, in_cone, in_convex_hull


def vectors(d, lo=-5, hi=5, min_size=0, max_size=6):
    return st.lists(st.tuples(*[st.integers(lo, hi)] * d), min_size=min_size, max_size=max_size)


def random_cone(rng, d, k):
    return [tuple(rng.randint(-5, 5) for _ in range(d)) for _ in range(k)]


def test_linprog_examples():
    assert feasible_point([[1, 1]], [1]) is not None
    assert feasible_point([[1, 1]], [-1]) is None
    x = in_cone([(1, 0), (0, 1)], (3, 2))
    assert x == (Fraction(3), Fraction(2))
    assert in_cone([(1, 0), (1, 1)], (0, 1)) is None
    assert in_convex_hull([(0, 0), (2, 0), (0, 2)], (1, 1)) is not None
    assert in_convex_hull([(0, 0), (2, 0), (0, 2)], (2, 1)) is None


def test_canonical_forms():
    C = cone_from_generators([(2, 0), (1, 1), (3, 3), (0, 2)], 2)
    assert C.generators == ((0, 1), (1, 0))
    assert is_strictly_convex(C)
    H = cone_from_generators([(1, 0), (-1, 0), (0, 1)], 2)  # upper half-plane
    assert H.lineality == ((1, 0),)
    assert H.generators == ((-1, 0), (0, 1), (1, 0))
    Hs = cone_from_generators([(1, -1), (-1, 1), (1, 1)], 2)  # tilted half-plane
    assert Hs.generators == ((-1, 1), (1, -1), (1, 1))
    assert cone_from_generators([], 3) == zero_cone(3)
    assert cone_from_generators([(0, 0)], 2) == zero_cone(2)
    with pytest.raises(ValueError):
        cone_from_generators([(1, 2, 3)], 2)


def test_dual_examples():
    assert dual_cone(cone_from_generators([(1, 0), (1, 1)], 2)).generators == ((0, 1), (1, -1))
    full = dual_cone(zero_cone(2))
    assert full.lineality and full.dimension == 2
    assert dual_cone(full) == zero_cone(2)
    H = cone_from_generators([(1, 0), (-1, 0), (0, 1)], 2)
    assert dual_cone(H).generators == ((0, 1),)


def test_containment_and_witness():
    C = cone_from_generators([(1, 0, 0), (0, 1, 0), (1, 1, 1)], 3)
    assert (2, 3, 1) in C
    assert (0, 0, 1) not in C
    w = cone_witness(C, (2, 3, 1))
    assert tuple(sum(c * g[k] for c, g in zip(w, C.generators)) for k in range(3)) == (2, 3, 1)
    with pytest.raises(ValueError):
        (1, 2) in C


@given(vectors(3))
def test_canonical_form_is_idempotent_and_order_free(gens):
    C = cone_from_generators(gens, 3)
    assert cone_from_generators(C.generators, 3) == C
    assert cone_from_generators(list(reversed(gens)), 3) == C
    for g in gens:
        assert g in C


@given(vectors(3, min_size=1))
def test_bidual(gens):
    C = cone_from_generators(gens, 3)
    assert cone_from_generators(dual_cone(dual_cone(C)).generators, 3) == C


@given(vectors(3, min_size=1), st.tuples(*[st.integers(-4, 4)] * 3))
def test_dual_pairing_characterizes_membership(gens, v):
    C = cone_from_generators(gens, 3)
    D = dual_cone(C)
    assert all(dot(u, g) >= 0 for u in D.generators for g in C.generators)
    assert (v in C) == all(dot(u, v) >= 0 for u in D.generators)


def _canonical_fm(gens, d):
    return cone_from_generators(dual_generators_fm(gens, d), d)


@given(st.integers(1, 4).flatmap(lambda d: st.tuples(st.just(d), vectors(d, max_size=7))))
def test_dd_matches_fm(args):
    d, gens = args
    assert dual_cone(cone_from_generators(gens, d)) == _canonical_fm(gens, d)


def test_dd_matches_fm_frozen_batch():
    rng = random.Random(20240611)
    for _ in range(60):
        d = rng.randint(1, 4)
        gens = random_cone(rng, d, rng.randint(1, 7))
        assert dual_cone(cone_from_generators(gens, d)) == _canonical_fm(gens, d)


def test_fm_equalities_for_lower_dimensional_cone():
    ineq, eq = fm_inequalities([(1, 0, 0), (0, 1, 0)], 3)
    assert eq == [(0, 0, 1)]
    assert sorted(ineq) == [(0, 1, 0), (1, 0, 0)]


def test_cones_equal_certificate_and_separation():
    A = cone_from_generators([(1, 0), (1, 2)], 2)
    B = RationalCone(2, ((1, 0), (1, 1), (1, 2)))  # non-canonical presentation of A
    cmp = cones_equal(A, B)
    assert cmp.equal and cmp.certificate.check(A, B)
    C = cone_from_generators([(1, 0), (1, 3)], 2)
    cmp = cones_equal(A, C)
    assert not cmp.equal
    assert cmp.separating_side == "second" and cmp.separating_vector == (1, 3)
    assert cmp.separating_vector not in A


def test_certificate_rejects_tampering():
    A = cone_from_generators([(1, 0), (1, 2)], 2)
    cert = cones_equal(A, A).certificate
    tgt, coeffs = cert.forward[0]
    bad = type(cert)(((tgt, tuple(c + 1 for c in coeffs)),) + cert.forward[1:], cert.backward)
    assert not bad.check(A, A)
    neg = type(cert)(((tgt, tuple(-c for c in coeffs)),) + cert.forward[1:], cert.backward)
    assert not neg.check(A, A)


def test_hilbert_basis_examples():
    assert set(hilbert_basis(cone_from_generators([(0, -1), (2, 1)], 2))) == {(0, -1), (1, 0), (2, 1)}
    assert set(hilbert_basis(cone_from_generators([(1, 0), (1, 3)], 2))) == {(1, 0), (1, 1), (1, 2), (1, 3)}
    assert set(hilbert_basis(cone_from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3))) == \
        {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    # cone over a square with apex at height 2: the centre point (1,1,1) is needed
    sq = cone_from_generators([(0, 0, 1), (2, 0, 1), (0, 2, 1), (2, 2, 1)], 3)
    assert (1, 1, 1) in hilbert_basis(sq)
    with pytest.raises(ValueError):
        hilbert_basis(cone_from_generators([(1, 0), (-1, 0)], 2))


def test_hilbert_basis_on_sublattice():
    C = cone_from_generators([(1, -1), (1, 1)], 2)
    hb = hilbert_basis(C, sublattice=[(1, 1), (0, 2)])  # even-sum lattice
    assert set(hb) == {(1, -1), (1, 1)}
    assert set(hilbert_basis(C)) == {(1, -1), (1, 0), (1, 1)}


@given(vectors(2, -4, 4, min_size=1, max_size=4), st.tuples(st.integers(-6, 6), st.integers(-6, 6)))
def test_hilbert_basis_generates_lattice_points(gens, v):
    C = cone_from_generators(gens, 2)
    if not is_strictly_convex(C) or v not in C:
        return
    hb = hilbert_basis(C)
    assert all(h in C for h in hb)
    # descend along a functional positive on C \ {0}: v is reachable iff some v - h is
    f = tuple(sum(col) for col in zip(*C.facets))

    @functools.lru_cache(maxsize=None)
    def reachable(x):
        if not any(x):
            return True
        return any(reachable(tuple(a - b for a, b in zip(x, h))) for h in hb
                   if tuple(a - b for a, b in zip(x, h)) in C)

    assert all(dot(f, h) > 0 for h in hb)
    assert reachable(tuple(v))
