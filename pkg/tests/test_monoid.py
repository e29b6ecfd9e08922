from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from bkn_forge.bkn import InvalidLTriple, build_bkn
from bkn_forge.cones import cone_from_generators, cones_equal
from bkn_forge.lattice import IntMatrix
from bkn_forge.monoid import (
    ScalarConditionFailed,
    abelianization_data,
    audit_generators,
    audit_pairing,
    compare_monoids,
    putcha_renner,
    putcha_renner_from_weights,
    restrict_xi_plus,
    slice_hilbert_basis,
    theorem_monoids_certificate,
    vinberg_slice,
    xi_plus,
)
from bkn_forge.rootdata import direct_product, gl, sl, sp, torus

CASES = [(gl(2), (1, 0)), (gl(2), (2, 0)), (gl(2), (5, 0)), (gl(3), (1, 0, 0)), (gl(3), (1, 0, -1)),
         (gl(3), (2, 1, 0)), (sp(4), (1, 0)), (sp(4), (1, 1)), (gl(4), (2, 0, 0, 0)),
         (direct_product(gl(2), torus(1)), (1, 0, 3)), (sl(3), (2, 1))]


def test_gl2_standard_by_hand():
    # ω has weights ±1 and w₀ω = -1: generators (⟨α,λ⟩, 1) = (1, 1) and (0, -1), plus (1, 0)
    s = vinberg_slice(gl(2), (1, 0))
    assert s.raw_vectors == ((1, 0), (0, -1), (1, 1))
    assert s.xi_lambda.generators == ((0, -1), (1, 1))
    pr = putcha_renner(gl(2), (1, 0))
    assert pr.xi_rho.generators == ((1, -1), (1, 0))
    assert pr.xi_rho_dual.generators == ((0, -1), (1, 1))


def test_gl2_sym2_and_hilbert_basis():
    s = vinberg_slice(gl(2), (2, 0))
    assert s.xi_lambda.generators == ((0, -1), (2, 1))
    assert set(slice_hilbert_basis(s)) == {(0, -1), (1, 0), (2, 1)}


@pytest.mark.parametrize("g,lam", CASES)
def test_monoids_agree(g, lam):
    mc = theorem_monoids_certificate(g, lam)
    assert mc.equal and mc.audit.ok
    assert mc.cones.certificate.check(mc.vinberg.xi_lambda, mc.putcha_renner.xi_rho_dual)
    assert mc.identification == IntMatrix.identity(mc.vinberg.rank)


@pytest.mark.parametrize("g,lam", CASES)
def test_restricted_xi_plus_matches_slice(g, lam):
    assert cones_equal(restrict_xi_plus(g, lam), vinberg_slice(g, lam).xi_lambda).equal


@pytest.mark.parametrize("g,lam", CASES)
def test_audit_route_agrees_with_slice(g, lam):
    # ⟨ω, λ - w₀λ⟩ on cocharacters minus the descent term reproduces every stored pairing
    s = vinberg_slice(g, lam)
    for gen in s.generators:
        assert audit_pairing(g, lam, gen.omega, gen.weight) == gen.pairing


def test_xi_plus_sl2():
    xp = xi_plus(sl(2))
    assert xp.cone.generators == ((1, -1), (1, 1))
    assert xp.sublattice == ((1, 1), (0, 2))
    assert xp.index == 2
    assert abelianization_data(sl(2)).matrix == IntMatrix.from_rows([[2], [0]])
    with pytest.raises(ValueError):
        xi_plus(torus(2))


@pytest.mark.parametrize("g,lam", CASES[:6])
def test_every_pairing_perturbation_is_caught(g, lam):
    s = vinberg_slice(g, lam)
    pr = putcha_renner(g, lam)
    for i, gen in enumerate(s.generators):
        for delta in (1, -1):
            gens = list(s.generators)
            gens[i] = replace(gen, pairing=gen.pairing + delta)
            mc = compare_monoids(s.with_generators(gens), pr)
            assert not mc.equal
            assert not audit_generators(s.with_generators(gens)).ok


def test_extreme_perturbation_separates_cones():
    s = vinberg_slice(gl(2), (1, 0))
    pr = putcha_renner(gl(2), (1, 0))
    gens = [replace(g, pairing=g.pairing + 1) if g.weight == (1,) else g for g in s.generators]
    mc = compare_monoids(s.with_generators(gens), pr)
    assert not mc.cones.equal
    assert mc.cones.separating_vector is not None


def test_putcha_renner_refusals():
    with pytest.raises(ScalarConditionFailed):
        putcha_renner_from_weights([((1, 0), 1), ((2, 1), 1)])
    with pytest.raises(ScalarConditionFailed):
        putcha_renner_from_weights([((1, 0), 1), ((1, 1), 1), ((1, -1), 1)], covector=(0, 1))
    with pytest.raises(ValueError):
        putcha_renner_from_weights([])


def test_dominant_generators_are_dominant():
    d = build_bkn(gl(3), (1, 0, 0))
    pr = putcha_renner(gl(3), (1, 0, 0), d)
    b = d.h_rho_based
    from bkn_forge.weyl import is_dominant
    assert pr.dominant_generators and all(is_dominant(b, v) for v in pr.dominant_generators)


def test_invalid_triple_refused():
    with pytest.raises(InvalidLTriple):
        vinberg_slice(gl(2), (1, 1))


@given(st.integers(1, 8))
def test_gl2_symn_cone_closed_form(n):
    # ξ_λ for GL_2, λ = (n, 0): generated by (0, -1) and (n, 1)
    s = vinberg_slice(gl(2), (n, 0))
    assert s.xi_lambda == cone_from_generators([(0, -1), (n, 1)], 2)
    assert theorem_monoids_certificate(gl(2), (n, 0)).equal
