"""L-triples and the fiber-product BKN triple, at the level of root data.

Input convention: G is a root datum and λ is a vector in X_*(T) = X∨ of G
(equivalently a character of the dual torus). Derived data use

* P   = fundamental-weight coordinates of the simply connected derived group
        (a root α becomes ᾱ = (⟨α, α_j∨⟩)_j),
* Q∨  = simple-coroot coordinates.

The group H_ρ has character lattice Z ⊕ P, roots (⟨α,λ⟩, ᾱ) and coroots
(0, α∨); its dual H_ρ∨ has character lattice Z ⊕ Q∨. The representation ρ_fp
of H_ρ∨ has weights (1, λ′ - λ) where λ′ runs over the weights of the
irreducible representation of G∨ with highest weight λ.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .lattice import (
    IntMatrix,
    IntVector,
    QuotientStructure,
    dot,
    hermite_normal_form,
    integer_kernel,
    quotient_structure,
    smith_normal_form,
    solve_integer,
)
from .rootdata import (
    BasedRootDatum,
    LatticeMap,
    RootDatum,
    base,
    base_with_positive,
    direct_product,
    dual,
    dual_based,
    fundamental_group_of_derived,
    gm,
    simple_factors,
    simply_connected_derived,
    verify_isomorphism,
)
from .weyl import weight_multiplicities


@dataclass(frozen=True)
class LTriple:
    g: RootDatum
    lam: IntVector

    @classmethod
    def of(cls, g: RootDatum, lam: Sequence[int]) -> "LTriple":
        return cls(g, tuple(int(x) for x in lam))


@dataclass(frozen=True)
class LTripleReport:
    ok: bool
    failures: tuple[str, ...]
    lambda_p: IntVector  # (⟨α_i, λ⟩)_i over simple roots

    def __bool__(self) -> bool:
        return self.ok


class InvalidLTriple(ValueError):
    pass


def lambda_on_simple_roots(b: BasedRootDatum, lam: Sequence[int]) -> IntVector:
    """λ in fundamental-coweight coordinates: (⟨α_i, λ⟩)_i."""
    return tuple(dot(a, lam) for a in b.simple_roots)


def validate_l_triple(g: RootDatum, lam: Sequence[int]) -> LTripleReport:
    lam = tuple(lam)
    if len(lam) != g.rank:
        return LTripleReport(False, (f"λ has {len(lam)} coordinates, expected {g.rank}",), ())
    b = base(g)
    lp = lambda_on_simple_roots(b, lam)
    fails = []
    for i, v in enumerate(lp):
        if v < 0:
            fails.append(f"λ is not dominant: ⟨α_{i}, λ⟩ = {v} < 0")
    for comp in simple_factors(b).components:
        if all(lp[i] == 0 for i in comp.simple):
            fails.append(f"λ is trivial on simple component {comp.cartan_type} (simple roots {list(comp.simple)})")
    return LTripleReport(not fails, tuple(fails), lp)


# ---------------------------------------------------------------------------
# construction

@dataclass(frozen=True)
class BKNTripleData:
    g: RootDatum
    lam: IntVector
    lambda_p: IntVector
    h_rho: RootDatum            # X = Z ⊕ P
    h_rho_dual: RootDatum       # X = Z ⊕ Q∨
    positive: tuple[int, ...]   # positive root indices inherited from G
    rho_fp_weights: tuple[tuple[IntVector, int], ...]  # (weight in Z ⊕ Q∨, multiplicity)
    d_fp: IntVector             # character of H_ρ, in Z ⊕ P
    d_fp_covector: IntVector    # cocharacter of H_ρ∨, in Z ⊕ P
    eta_fp: LatticeMap          # X*(G) → Z ⊕ P

    @property
    def h_rho_based(self) -> BasedRootDatum:
        return base_with_positive(self.h_rho, self.positive)

    @property
    def h_rho_dual_based(self) -> BasedRootDatum:
        return base_with_positive(self.h_rho_dual, self.positive)

    @property
    def weights(self) -> tuple[IntVector, ...]:
        return tuple(w for w, _ in self.rho_fp_weights)

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.rho_fp_weights)


def _h_rho(b: BasedRootDatum, lam: IntVector) -> RootDatum:
    sc = simply_connected_derived(b)
    roots = tuple((dot(a, lam),) + abar for a, abar in zip(b.datum.roots, sc.datum.roots))
    coroots = tuple((0,) + c for c in sc.datum.coroots)
    return RootDatum(1 + len(b.simple), roots, coroots)


def _eta(b: BasedRootDatum, lam: IntVector) -> LatticeMap:
    rows = [lam] + list(b.simple_coroots)
    return LatticeMap(IntMatrix.from_rows(rows, b.rank))


def rho_fp_weights_via_dual_group(b: BasedRootDatum, lam: IntVector) -> dict[IntVector, int]:
    """Weights (1, λ′ - λ) computed from the irreducible representation of G∨ itself.

    Independent of the H_ρ∨ construction; used as a cross-check.
    """
    db = dual_based(b)
    mult = weight_multiplicities(db, lam)
    if not b.simple:
        return {(1,): mult[lam]}
    M = IntMatrix.from_columns(b.simple_coroots, b.rank)
    out = {}
    for mu, m in mult.items():
        q = solve_integer(M, tuple(x - y for x, y in zip(mu, lam)))
        if q is None:
            raise AssertionError(f"λ′ - λ = {mu} - {lam} is not in the coroot lattice")
        out[(1,) + q] = m
    return out


def build_bkn(g: RootDatum, lam: Sequence[int]) -> BKNTripleData:
    lam = tuple(lam)
    rep = validate_l_triple(g, lam)
    if not rep.ok:
        raise InvalidLTriple("; ".join(rep.failures))
    b = base(g)
    l = len(b.simple)
    h = _h_rho(b, lam)
    hd = dual(h)
    hdb = base_with_positive(hd, b.positive)
    top = (1,) + (0,) * l
    mult = weight_multiplicities(hdb, top)
    check = rho_fp_weights_via_dual_group(b, lam)
    if check != mult:
        raise AssertionError("ρ_fp weights disagree between H_ρ∨ and G∨ computations")
    eta = _eta(b, lam)
    return BKNTripleData(
        g=g, lam=lam, lambda_p=rep.lambda_p, h_rho=h, h_rho_dual=hd, positive=b.positive,
        rho_fp_weights=tuple(sorted(mult.items())), d_fp=top, d_fp_covector=top, eta_fp=eta,
    )


# ---------------------------------------------------------------------------
# verification of the four BKN conditions

@dataclass(frozen=True)
class BKNValidationReport:
    cond1_kernel_trivial: bool
    kernel: QuotientStructure
    nontrivial_on_factors: bool
    cond2_character_exact_sequence: bool
    character: IntVector
    radical_rank: int
    center_quotient: QuotientStructure  # X*(H) / (Z𝔡 + ZΦ), informational
    cond3_simply_connected: bool
    fundamental_group: QuotientStructure
    cond4_scalar_central_cochar: bool
    offending_weight: IntVector | None
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return (self.cond1_kernel_trivial and self.cond2_character_exact_sequence
                and self.cond3_simply_connected and self.cond4_scalar_central_cochar)


def rho_fp_kernel(data: BKNTripleData) -> QuotientStructure:
    """Z ⊕ Q∨ modulo the span of the ρ_fp weights; trivial iff ρ_fp is injective on the torus."""
    return quotient_structure(data.h_rho_dual.rank, data.weights)


def verify_bkn(data: BKNTripleData) -> BKNValidationReport:
    notes = []
    h = data.h_rho
    kern = rho_fp_kernel(data)
    on_factors = True
    hdb = data.h_rho_dual_based
    for comp in simple_factors(hdb).components:
        cos = [hdb.simple_coroots[i] for i in comp.simple]
        if not any(dot(mu, c) for mu in data.weights for c in cos):
            on_factors = False
            notes.append(f"ρ_fp is trivial on the {comp.cartan_type} factor")
    cond1 = kern.is_trivial and on_factors

    d = data.d_fp
    kills_coroots = all(dot(d, c) == 0 for c in h.coroots)
    annihilator = integer_kernel(IntMatrix.from_rows(h.coroots, h.rank)) if h.coroots \
        else [tuple(int(i == j) for j in range(h.rank)) for i in range(h.rank)]
    radical_rank = len(annihilator)
    generates = False
    if radical_rank == 1 and kills_coroots:
        generates = d == annihilator[0] or d == tuple(-x for x in annihilator[0])
    cond2 = kills_coroots and radical_rank == 1 and generates
    if not cond2:
        notes.append(f"𝔡 = {d} does not generate the characters trivial on the derived group "
                     f"(radical rank {radical_rank})")
    center_q = quotient_structure(h.rank, list(h.roots) + [d])

    pi1 = fundamental_group_of_derived(h)
    cond3 = pi1.is_trivial

    bad = next((mu for mu in data.weights if dot(mu, data.d_fp_covector) != 1), None)
    cond4 = bad is None
    if bad is not None:
        notes.append(f"⟨μ, 𝔡∨⟩ = {dot(bad, data.d_fp_covector)} ≠ 1 at weight {bad}")
    return BKNValidationReport(cond1, kern, on_factors, cond2, d, radical_rank, center_q,
                               cond3, pi1, cond4, bad, tuple(notes))


# ---------------------------------------------------------------------------
# structural checks

@dataclass(frozen=True)
class ProductDecomposition:
    holds: bool
    coroot_coefficients: IntVector | None  # λ restricted to the derived group, on simple coroots
    witness: LatticeMap | None             # Z ⊕ P → Z ⊕ P, onto gm × (simply connected derived)
    target: RootDatum | None

    def __bool__(self) -> bool:
        return self.holds


def product_decomposition_check(g: RootDatum, lam: Sequence[int]) -> ProductDecomposition:
    """Does λ, read in the coweight lattice of the derived system, lie in the coroot lattice?

    If so, (n, p) ↦ (n - c·p, p) with λ ≡ Σ c_j α_j∨ carries H_ρ onto the
    product of G_m with the simply connected derived group; the witness is
    verified before being returned.
    """
    lam = tuple(lam)
    b = base(g)
    l = len(b.simple)
    lp = lambda_on_simple_roots(b, lam)
    sc = simply_connected_derived(b)
    target = direct_product(gm(), sc.datum)
    if l == 0:
        return ProductDecomposition(True, (), LatticeMap.identity(1), target)
    C = IntMatrix.from_rows(b.cartan, l)  # C[i][j] = ⟨α_i, α_j∨⟩
    c = solve_integer(C, lp)
    if c is None:
        return ProductDecomposition(False, None, None, target)
    rows = [(1,) + tuple(-x for x in c)] + [(0,) + tuple(int(i == j) for j in range(l)) for i in range(l)]
    f = LatticeMap(IntMatrix.from_rows(rows, 1 + l))
    h = _h_rho(b, lam)
    if not verify_isomorphism(f, h, target):
        raise AssertionError("product witness failed to verify")
    return ProductDecomposition(True, c, f, target)


def cokernel_of_eta(g: RootDatum, lam: Sequence[int]) -> QuotientStructure:
    """X_*(T) / (Zλ + Q∨): the cokernel of η_fp on cocharacter lattices."""
    b = base(g)
    return quotient_structure(g.rank, [tuple(lam)] + list(b.simple_coroots))


@dataclass(frozen=True)
class QuotientPresentation:
    center_characters: QuotientStructure  # X∨/Q∨ = X*(Z∨)
    lambda_class: IntVector               # image of λ in the Smith coordinates of X∨/Q∨
    lambda_class_moduli: IntVector        # modulus of each coordinate (0 = free)
    lattice_basis: tuple[IntVector, ...]  # basis of {(n, χ) : χ - nλ ∈ Q∨} ⊂ Z ⊕ X∨
    datum: RootDatum                      # root datum of (G_m × G∨)/{(λ(z)^-1, z)}
    comparison: LatticeMap                # Z ⊕ Q∨ → lattice coordinates
    matches_h_rho_dual: bool


def quotient_presentation_of_dual(g: RootDatum, lam: Sequence[int]) -> QuotientPresentation:
    """Character lattice of (G_m × G∨)/{(λ(z)^-1, z) : z ∈ Z∨}, computed by Smith form.

    A character (n, χ) of G_m × T∨ descends iff χ - nλ vanishes on Z∨, i.e.
    χ - nλ ∈ Q∨. The resulting datum is compared with H_ρ∨ through
    (n, q) ↦ (n, nλ + Σ q_j α_j∨).
    """
    lam = tuple(lam)
    rep = validate_l_triple(g, lam)
    if not rep.ok:
        raise InvalidLTriple("; ".join(rep.failures))
    b = base(g)
    r, l = g.rank, len(b.simple)
    center = quotient_structure(r, b.simple_coroots)
    if l:
        Cm = IntMatrix.from_columns(b.simple_coroots, r)
        U, S, _ = smith_normal_form(Cm)
        diag = [S.entries[i][i] if i < min(S.rows, S.cols) else 0 for i in range(r)]
    else:
        U = IntMatrix.identity(r)
        diag = [0] * r
    # coordinates i with diag 1 are killed, others give Z/diag or Z (diag 0)
    moduli = tuple(dgi for dgi in diag if dgi != 1)
    idx = [i for i, dgi in enumerate(diag) if dgi != 1]
    ul = U.apply(lam)
    lam_class = tuple(ul[i] % diag[i] if diag[i] else ul[i] for i in idx)
    # kernel of (n, χ) ↦ U(χ - nλ) restricted to idx, modulo diag
    k = len(idx)
    rows = []
    for t, i in enumerate(idx):
        row = [-ul[i]] + list(U.entries[i])
        row += [-diag[i] if s == t else 0 for s in range(k)]
        rows.append(row)
    if rows:
        K = integer_kernel(IntMatrix.from_rows(rows, 1 + r + k))
        proj = [v[:1 + r] for v in K]
        basis = [tuple(x) for x in hermite_normal_form(IntMatrix.from_rows(proj, 1 + r)).tolist()]
    else:
        basis = [tuple(int(i == j) for j in range(1 + r)) for i in range(1 + r)]
    B = IntMatrix.from_columns(basis, 1 + r)
    roots, coroots = [], []
    for a, c in zip(g.roots, g.coroots):
        x = solve_integer(B, (0,) + c)
        if x is None:
            raise AssertionError("dual root does not descend to the quotient")
        roots.append(x)
        coroots.append(tuple(dot((0,) + a, v) for v in basis))
    datum = RootDatum(len(basis), tuple(roots), tuple(coroots))
    cols = []
    for j in range(1 + l):
        if j == 0:
            v = (1,) + lam
        else:
            v = (0,) + b.simple_coroots[j - 1]
        x = solve_integer(B, v)
        if x is None:
            raise AssertionError("H_ρ∨ lattice does not map into the quotient lattice")
        cols.append(x)
    f = LatticeMap(IntMatrix.from_columns(cols, len(basis)))
    h = _h_rho(b, lam)
    ok = len(basis) == 1 + l and bool(verify_isomorphism(f, dual(h), datum))
    return QuotientPresentation(center, lam_class, moduli, tuple(basis), datum, f, ok)
