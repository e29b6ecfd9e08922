"""Torus closures of the Vinberg-side and Putcha–Renner-side monoids.

Vinberg side: the cone ξ_λ ⊂ Z ⊕ P generated by (1, 0) and
(⟨ω′ - w₀ω, λ⟩, ω′) for ω fundamental and ω′ a weight of V(ω).

Putcha–Renner side: ξ(ρ) is generated by the ρ_fp weights in Z ⊕ Q∨ and ξ(ρ)∨
is its dual under the standard pairing, which lands in Z ⊕ P because P and Q∨
use dual bases. The identification matrix between the two presentations is
therefore the identity; it is still carried explicitly in every comparison.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .bkn import BKNTripleData, InvalidLTriple, build_bkn, lambda_on_simple_roots, validate_l_triple
from .cones import (
    ConeComparison,
    RationalCone,
    cone_from_generators,
    cones_equal,
    dual_cone,
    hilbert_basis,
    is_strictly_convex,
)
from .lattice import IntMatrix, IntVector, dot, hermite_normal_form, quotient_structure
from .rootdata import BasedRootDatum, LatticeMap, RootDatum, base, dual_based, simply_connected_derived
from .weyl import dominant_representative, irrep_weight_set, longest_element_action


@dataclass(frozen=True)
class SliceGenerator:
    """One generator (pairing, ω′) of ξ_λ, with the fundamental weight it came from."""

    omega: int           # index of the fundamental weight ω
    weight: IntVector    # ω′ in P coordinates
    pairing: int         # ⟨ω′ - w₀ω, λ⟩

    @property
    def vector(self) -> IntVector:
        return (self.pairing,) + self.weight


@dataclass(frozen=True)
class VinbergSliceData:
    g: RootDatum
    lam: IntVector
    lambda_p: IntVector
    generators: tuple[SliceGenerator, ...]
    xi_lambda: RationalCone

    @property
    def rank(self) -> int:
        return 1 + len(self.lambda_p)

    @property
    def raw_vectors(self) -> tuple[IntVector, ...]:
        return ((1,) + (0,) * len(self.lambda_p),) + tuple(s.vector for s in self.generators)

    def with_generators(self, gens: Sequence[SliceGenerator]) -> "VinbergSliceData":
        """Same slice with replaced generator records; the cone is rebuilt from them."""
        gens = tuple(gens)
        vecs = [(1,) + (0,) * len(self.lambda_p)] + [s.vector for s in gens]
        return replace(self, generators=gens, xi_lambda=cone_from_generators(vecs, self.rank))


def _to_simple_root_coords(b: BasedRootDatum, v: Sequence[int]) -> tuple[int, ...]:
    coeffs = b.simple_coordinates(v)
    if any(c.denominator != 1 for c in coeffs):
        raise AssertionError(f"{tuple(v)} is not in the root lattice: {coeffs}")
    return tuple(int(c) for c in coeffs)


def _sc_based(g: RootDatum) -> BasedRootDatum:
    return simply_connected_derived(base(g))


def vinberg_slice(g: RootDatum, lam: Sequence[int]) -> VinbergSliceData:
    lam = tuple(lam)
    rep = validate_l_triple(g, lam)
    if not rep.ok:
        raise InvalidLTriple("; ".join(rep.failures))
    sc = _sc_based(g)
    l = sc.rank
    lp = rep.lambda_p
    gens = []
    for i in range(l):
        omega = tuple(int(i == j) for j in range(l))
        low = longest_element_action(sc, omega)
        for wt in irrep_weight_set(sc, omega):
            k = _to_simple_root_coords(sc, tuple(x - y for x, y in zip(wt, low)))
            gens.append(SliceGenerator(i, wt, dot(k, lp)))
    gens.sort(key=lambda s: (s.omega, s.weight))
    vecs = [(1,) + (0,) * l] + [s.vector for s in gens]
    return VinbergSliceData(g, lam, lp, tuple(gens), cone_from_generators(vecs, 1 + l))


def audit_pairing(g: RootDatum, lam: Sequence[int], omega: int, weight: Sequence[int]) -> int:
    """⟨ω′ - w₀ω_i, λ⟩ by a second route.

    Splits it as ⟨ω_i, λ - w₀λ⟩ - ⟨ω_i - ω′, λ⟩: the first term is the
    α_i∨-coefficient of λ - w₀λ computed with the Weyl group acting on
    cocharacters of G, the second uses the descent ω_i - ω′ = Σ k_j α_j.
    """
    b = base(g)
    db = dual_based(b)
    lam = tuple(lam)
    w0lam = longest_element_action(db, lam)
    c = _to_simple_root_coords(db, tuple(x - y for x, y in zip(lam, w0lam)))
    sc = _sc_based(g)
    l = sc.rank
    omega_vec = tuple(int(omega == j) for j in range(l))
    k = _to_simple_root_coords(sc, tuple(x - y for x, y in zip(omega_vec, weight)))
    lp = lambda_on_simple_roots(b, lam)
    return c[omega] - dot(k, lp)


# ---------------------------------------------------------------------------
# xi plus and the abelianization

@dataclass(frozen=True)
class XiPlus:
    cone: RationalCone                 # in P ⊕ P
    sublattice: tuple[IntVector, ...]  # basis of {(χ1, χ2) : χ1 + χ2 ∈ Q}
    index: int                         # [P ⊕ P : sublattice] = |P / Q|


def xi_plus(g: RootDatum) -> XiPlus:
    sc = _sc_based(g)
    l = sc.rank
    if l == 0:
        raise ValueError("ξ⁺ needs a nonempty derived root system")
    simple = sc.simple_roots
    vecs = []
    for j in range(l):
        e = tuple(int(i == j) for i in range(l))
        vecs.append(e + tuple(-x for x in e))
    for a in simple:
        vecs.append((0,) * l + a)
    basis = tuple(tuple(r) for r in hermite_normal_form(IntMatrix.from_rows(vecs, 2 * l)).tolist())
    q = quotient_structure(2 * l, basis)
    gens = [a + (0,) * l for a in simple]
    for i in range(l):
        omega = tuple(int(i == j) for j in range(l))
        neg_low = tuple(-x for x in longest_element_action(sc, omega))
        for wt in irrep_weight_set(sc, omega):
            gens.append(neg_low + wt)
    return XiPlus(cone_from_generators(gens, 2 * l), basis, q.order or 1)


def restrict_xi_plus(g: RootDatum, lam: Sequence[int]) -> RationalCone:
    """Image of ξ⁺ under (χ1, χ2) ↦ (⟨χ1 + χ2, λ⟩, χ2), together with (1, 0)."""
    sc = _sc_based(g)
    l = sc.rank
    lp = lambda_on_simple_roots(base(g), lam)
    xp = xi_plus(g)
    img = [(1,) + (0,) * l]
    for v in xp.cone.generators:
        s = tuple(x + y for x, y in zip(v[:l], v[l:]))
        # canonical generators are primitive, so they may leave the root lattice; the map is linear
        img.append((dot(sc.simple_coordinates(s), lp),) + v[l:])
    return cone_from_generators(img, 1 + l)


def abelianization_data(g: RootDatum) -> LatticeMap:
    """Z^Δ → P ⊕ P, e_α ↦ (α, 0)."""
    sc = _sc_based(g)
    l = sc.rank
    if l == 0:
        raise ValueError("abelianization needs a nonempty derived root system")
    cols = [a + (0,) * l for a in sc.simple_roots]
    return LatticeMap(IntMatrix.from_columns(cols, 2 * l))


# ---------------------------------------------------------------------------
# Putcha–Renner side

class ScalarConditionFailed(ValueError):
    pass


@dataclass(frozen=True)
class PutchaRennerData:
    omega_rho: tuple[tuple[IntVector, int], ...]  # weights in Z ⊕ Q∨ with multiplicity
    xi_rho: RationalCone
    xi_rho_dual: RationalCone                     # in Z ⊕ P
    dominant_generators: tuple[IntVector, ...]


def putcha_renner_from_weights(weights: Sequence[tuple[IntVector, int]], h_rho_based: BasedRootDatum | None = None,
                               covector: Sequence[int] | None = None) -> PutchaRennerData:
    weights = tuple((tuple(w), m) for w, m in weights)
    if not weights:
        raise ValueError("no weights")
    d = len(weights[0][0])
    covector = tuple(covector) if covector is not None else (1,) + (0,) * (d - 1)
    bad = [w for w, _ in weights if dot(w, covector) != 1]
    if bad:
        raise ScalarConditionFailed(f"central cocharacter does not act by scalars: ⟨μ, 𝔡∨⟩ ≠ 1 at {bad[0]}")
    xi = cone_from_generators([w for w, _ in weights], d)
    if not is_strictly_convex(xi):
        raise ScalarConditionFailed("ξ(ρ) contains a line")
    xd = dual_cone(xi)
    doms = set()
    if h_rho_based is not None:
        for v in xd.generators:
            doms.add(dominant_representative(h_rho_based, v)[0])
    return PutchaRennerData(weights, xi, xd, tuple(sorted(doms)))


def putcha_renner(g: RootDatum, lam: Sequence[int], data: BKNTripleData | None = None) -> PutchaRennerData:
    data = data or build_bkn(g, lam)
    return putcha_renner_from_weights(data.rho_fp_weights, data.h_rho_based, data.d_fp_covector)


# ---------------------------------------------------------------------------
# comparison

@dataclass(frozen=True)
class GeneratorAudit:
    ok: bool
    mismatches: tuple[tuple[int, IntVector, int, int], ...]  # (ω index, ω′, stored, recomputed)


@dataclass(frozen=True)
class MonoidComparison:
    equal: bool
    cones: ConeComparison
    audit: GeneratorAudit
    identification: IntMatrix  # Z ⊕ P (Vinberg side) → Z ⊕ P (dual of Z ⊕ Q∨)
    vinberg: VinbergSliceData
    putcha_renner: PutchaRennerData

    def __bool__(self) -> bool:
        return self.equal


def audit_generators(s: VinbergSliceData) -> GeneratorAudit:
    bad = []
    for gen in s.generators:
        v = audit_pairing(s.g, s.lam, gen.omega, gen.weight)
        if v != gen.pairing:
            bad.append((gen.omega, gen.weight, gen.pairing, v))
    return GeneratorAudit(not bad, tuple(bad))


def compare_monoids(s: VinbergSliceData, pr: PutchaRennerData) -> MonoidComparison:
    ident = IntMatrix.identity(s.rank)
    mapped = cone_from_generators([ident.apply(v) for v in s.xi_lambda.generators], s.rank)
    cmp = cones_equal(mapped, pr.xi_rho_dual)
    audit = audit_generators(s)
    return MonoidComparison(cmp.equal and audit.ok, cmp, audit, ident, s, pr)


def theorem_monoids_certificate(g: RootDatum, lam: Sequence[int], data: BKNTripleData | None = None) -> MonoidComparison:
    """Compare ξ_λ with ξ(ρ)∨ for a valid triple, with exact witnesses both ways."""
    data = data or build_bkn(g, lam)
    return compare_monoids(vinberg_slice(g, lam), putcha_renner(g, lam, data))


def slice_hilbert_basis(s: VinbergSliceData) -> tuple[IntVector, ...]:
    return hilbert_basis(s.xi_lambda)
