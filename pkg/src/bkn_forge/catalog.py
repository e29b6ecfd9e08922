"""Fixture catalog for the five example families, and the report runner.

Families (λ in cocharacter coordinates of G):

* ``gl2-symn``     G = GL_2, λ = (n, 0)               n = 1..6
* ``gln-std``      G = GL_n, λ = e_1                   n = 2..5
* ``gln-adjoint``  G = GL_n, λ = e_1 - e_n (highest root; the irreducible
                   part of the adjoint representation)  n = 2..5
* ``gln-sym2``     G = GL_n, λ = 2e_1                  n = 2..5
* ``sp2n``         G = Sp_2n, λ = e_1                  n = 1..3
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .bkn import (
    BKNTripleData,
    build_bkn,
    cokernel_of_eta,
    product_decomposition_check,
    quotient_presentation_of_dual,
    rho_fp_kernel,
    validate_l_triple,
    verify_bkn,
)
from .cones import cone_from_generators, cones_equal
from .config import RunConfig
from .fm import dual_generators_fm
from .lattice import IntMatrix, IntVector, QuotientStructure, dot, integer_kernel, solve_integer, unimodular_inverse
from .monoid import theorem_monoids_certificate
from .rootdata import (
    LatticeMap,
    RootDatum,
    direct_product,
    find_isomorphism,
    gl,
    gm,
    pgl,
    sl,
    so_odd,
    sp,
    sublattice_datum,
    validate_root_datum,
    verify_isomorphism,
)

ADJOINT_NOTE = ("The adjoint representation of GL_n is reducible (scalars plus traceless part); "
                "this fixture uses λ = e_1 - e_n, the highest weight of the irreducible traceless part.")


# ---------------------------------------------------------------------------
# reference groups and witnesses

def gl_witness(n: int, c: Sequence[int]) -> IntMatrix:
    """Character-lattice map Z ⊕ P → X*(GL_n) inverse to the pullback along (a, g) ↦ diag(a^c) g.

    The pullback sends e_i to (c_i, ω_i - ω_{i-1}) with ω_0 = ω_n = 0.
    """
    l = n - 1
    cols = []
    for i in range(n):
        eps = [0] * l
        if i < l:
            eps[i] += 1
        if i >= 1:
            eps[i - 1] -= 1
        cols.append((c[i],) + tuple(eps))
    pull = IntMatrix.from_columns(cols, n)
    return unimodular_inverse(pull)


def gl_mod_sign(n: int) -> RootDatum:
    """GL_n / {±I}: characters of GL_n with even total degree."""
    basis = [tuple(1 if k == i else -1 if k == i + 1 else 0 for k in range(n)) for i in range(n - 1)]
    basis.append(tuple(2 if k == n - 1 else 0 for k in range(n)))
    return sublattice_datum(gl(n), basis)


def det_square_group(n: int) -> tuple[RootDatum, IntVector]:
    """{(a, g) ∈ G_m × GL_n : det g = a²} and its character a.

    Cocharacters are {(m, v) ∈ Z ⊕ Z^n : Σv = 2m}; characters are the dual
    lattice, written in the basis dual to a kernel basis.
    """
    row = IntMatrix.from_rows([(-2,) + (1,) * n], 1 + n)
    ybasis = integer_kernel(row)
    Y = IntMatrix.from_columns(ybasis, 1 + n)
    roots, coroots = [], []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            v = [0] * (1 + n)
            v[1 + i], v[1 + j] = 1, -1
            v = tuple(v)
            coroots.append(solve_integer(Y, v))
            roots.append(tuple(dot(v, y) for y in ybasis))
    a = tuple(dot((1,) + (0,) * n, y) for y in ybasis)
    return RootDatum(n, tuple(roots), tuple(coroots)), a


# ---------------------------------------------------------------------------
# fixtures

@dataclass(frozen=True)
class Expectations:
    product_decomposition: bool
    rho_fp_weight_count: int
    cokernel: QuotientStructure | None = None
    h_rho_target: RootDatum | None = None
    h_rho_target_name: str = ""
    h_rho_witness: IntMatrix | None = None
    d_fp_image: IntVector | None = None  # image of 𝔡_fp under the target isomorphism, up to sign
    dual_target: RootDatum | None = None
    dual_target_name: str = ""


@dataclass(frozen=True)
class Fixture:
    name: str
    family: str
    n: int
    g: RootDatum
    lam: IntVector
    expected: Expectations
    note: str = ""


FAMILY_RANGES = {
    "gl2-symn": (1, 6),
    "gln-std": (2, 5),
    "gln-adjoint": (2, 5),
    "gln-sym2": (2, 5),
    "sp2n": (1, 3),
}

# default suite: the ranges run by the acceptance tests (19 fixtures)
DEFAULT_RANGES = {
    "gl2-symn": (1, 6),
    "gln-std": (2, 5),
    "gln-adjoint": (2, 4),
    "gln-sym2": (2, 4),
    "sp2n": (1, 3),
}


def _check_range(family: str, n: int) -> None:
    lo, hi = FAMILY_RANGES[family]
    if not lo <= n <= hi:
        raise ValueError(f"{family}: n = {n} outside the supported range {lo}..{hi}")


def fixture_gl2_symn(n: int) -> Fixture:
    _check_range("gl2-symn", n)
    even = n % 2 == 0
    exp = Expectations(
        product_decomposition=even,
        rho_fp_weight_count=n + 1,
        cokernel=QuotientStructure(0, (n,) if n > 1 else ()),
        h_rho_target=None if even else gl(2),
        h_rho_target_name="" if even else "GL_2",
        h_rho_witness=None if even else gl_witness(2, ((n + 1) // 2, (1 - n) // 2)),
        dual_target=direct_product(gm(), pgl(2)) if even else gl(2),
        dual_target_name="G_m x PGL_2" if even else "GL_2",
    )
    return Fixture(f"gl2-symn-{n}", "gl2-symn", n, gl(2), (n, 0), exp)


def fixture_gln_std(n: int) -> Fixture:
    _check_range("gln-std", n)
    exp = Expectations(
        product_decomposition=False,
        rho_fp_weight_count=n,
        cokernel=QuotientStructure(0, ()),
        h_rho_target=gl(n),
        h_rho_target_name=f"GL_{n}",
        h_rho_witness=gl_witness(n, (1,) + (0,) * (n - 1)),
        dual_target=gl(n),
        dual_target_name=f"GL_{n}",
    )
    return Fixture(f"gln-std-{n}", "gln-std", n, gl(n), (1,) + (0,) * (n - 1), exp)


def fixture_gln_adjoint(n: int) -> Fixture:
    _check_range("gln-adjoint", n)
    exp = Expectations(
        product_decomposition=True,
        rho_fp_weight_count=n * n - 1,
        cokernel=QuotientStructure(1, ()),
        h_rho_target=direct_product(gm(), sl(n)),
        h_rho_target_name=f"G_m x SL_{n}",
        dual_target=direct_product(gm(), pgl(n)),
        dual_target_name=f"G_m x PGL_{n}",
    )
    return Fixture(f"gln-adjoint-{n}", "gln-adjoint", n, gl(n), (1,) + (0,) * (n - 2) + (-1,), exp, ADJOINT_NOTE)


def fixture_gln_sym2(n: int) -> Fixture:
    _check_range("gln-sym2", n)
    target, a = det_square_group(n)
    exp = Expectations(
        product_decomposition=n == 2,
        rho_fp_weight_count=n * (n + 1) // 2,
        cokernel=QuotientStructure(0, (2,)),
        h_rho_target=target,
        h_rho_target_name=f"{{(a, g) in G_m x GL_{n} : det g = a^2}}",
        d_fp_image=a,
        dual_target=gl_mod_sign(n),
        dual_target_name=f"GL_{n}/{{+-I}}",
    )
    return Fixture(f"gln-sym2-{n}", "gln-sym2", n, gl(n), (2,) + (0,) * (n - 1), exp)


def fixture_sp2n(n: int) -> Fixture:
    _check_range("sp2n", n)
    exp = Expectations(
        product_decomposition=True,
        rho_fp_weight_count=2 * n + 1,
        cokernel=QuotientStructure(0, ()),
        h_rho_target=direct_product(gm(), sp(2 * n)),
        h_rho_target_name=f"G_m x Sp_{2 * n}",
        dual_target=direct_product(gm(), so_odd(n)),
        dual_target_name=f"G_m x SO_{2 * n + 1}",
    )
    return Fixture(f"sp2n-{n}", "sp2n", n, sp(2 * n), (1,) + (0,) * (n - 1), exp)


FAMILIES: dict[str, Callable[[int], Fixture]] = {
    "gl2-symn": fixture_gl2_symn,
    "gln-std": fixture_gln_std,
    "gln-adjoint": fixture_gln_adjoint,
    "gln-sym2": fixture_gln_sym2,
    "sp2n": fixture_sp2n,
}


def default_suite() -> list[Fixture]:
    out = []
    for fam, (lo, hi) in DEFAULT_RANGES.items():
        out.extend(FAMILIES[fam](n) for n in range(lo, hi + 1))
    return out


# ---------------------------------------------------------------------------
# reports

@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    expected: object = None
    actual: object = None
    detail: str = ""

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


@dataclass
class Report:
    name: str
    g: RootDatum
    lam: IntVector
    note: str = ""
    checks: list[Check] = field(default_factory=list)
    certificates: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def add(self, name, passed, expected=None, actual=None, detail=""):
        self.checks.append(Check(name, bool(passed), expected, actual, detail))

    def to_dict(self, timings: bool = True) -> dict:
        out = {
            "name": self.name,
            "status": "PASS" if self.passed else "FAIL",
            "input": {"group": self.g, "lambda": self.lam},
            "checks": [{"name": c.name, "status": c.status, "expected": c.expected,
                        "actual": c.actual, "detail": c.detail} for c in self.checks],
            "certificates": self.certificates,
        }
        if self.note:
            out["note"] = self.note
        if timings:
            out["timings"] = self.timings
        return out

    def to_text(self) -> str:
        lines = [f"== {self.name}: {'PASS' if self.passed else 'FAIL'}"]
        if self.note:
            lines.append(f"   note: {self.note}")
        for c in self.checks:
            extra = f" ({c.detail})" if c.detail else ""
            lines.append(f"   {c.status} {c.name}{extra}")
        return "\n".join(lines)


def _cone_certificate(cmp) -> dict:
    if cmp.equal:
        cert = cmp.certificate
        return {"equal": True,
                "forward": [{"target": t, "coefficients": c} for t, c in cert.forward],
                "backward": [{"target": t, "coefficients": c} for t, c in cert.backward]}
    return {"equal": False, "separating_vector": cmp.separating_vector, "contained_in": cmp.separating_side}


def analyze_triple(rep: Report, g: RootDatum, lam: IntVector, monoid: bool = True,
                   hilbert: bool = False) -> BKNTripleData | None:
    """Checks shared by fixtures and ad-hoc CLI input. Returns the BKN data if built."""
    t = time.perf_counter()
    rv = validate_root_datum(g)
    rep.add("root_datum_valid", rv.ok, True, rv.ok, "; ".join(rv.failures[:5]))
    if not rv.ok:
        return None
    lt = validate_l_triple(g, lam)
    rep.timings["validate"] = time.perf_counter() - t
    rep.add("l_triple_valid", lt.ok, True, lt.ok, "; ".join(lt.failures))
    if not lt.ok:
        return None
    t = time.perf_counter()
    data = build_bkn(g, lam)
    v = verify_bkn(data)
    rep.timings["build_bkn"] = time.perf_counter() - t
    rep.add("bkn_cond1_faithful", v.cond1_kernel_trivial, True, v.cond1_kernel_trivial, f"kernel {v.kernel}")
    rep.add("bkn_cond2_character", v.cond2_character_exact_sequence, True, v.cond2_character_exact_sequence,
            f"𝔡 = {v.character}, radical rank {v.radical_rank}")
    rep.add("bkn_cond3_simply_connected", v.cond3_simply_connected, True, v.cond3_simply_connected,
            f"π1 = {v.fundamental_group}")
    rep.add("bkn_cond4_scalar", v.cond4_scalar_central_cochar, True, v.cond4_scalar_central_cochar,
            "" if v.offending_weight is None else f"offending weight {v.offending_weight}")
    rep.add("rho_fp_kernel_trivial", rho_fp_kernel(data).is_trivial, True, rho_fp_kernel(data).is_trivial,
            str(rho_fp_kernel(data)))
    rep.certificates["bkn"] = {
        "h_rho": data.h_rho, "h_rho_dual": data.h_rho_dual, "positive_roots": data.positive,
        "rho_fp_weights": [{"weight": w, "multiplicity": m} for w, m in data.rho_fp_weights],
        "d_fp": data.d_fp, "d_fp_covector": data.d_fp_covector, "eta_fp": data.eta_fp.matrix,
        "fundamental_group": v.fundamental_group, "rho_fp_kernel": v.kernel,
    }
    if monoid and v.cond4_scalar_central_cochar:
        t = time.perf_counter()
        mc = theorem_monoids_certificate(g, lam, data)
        rep.timings["monoids"] = time.perf_counter() - t
        rep.add("monoids_equal", mc.equal, True, mc.equal,
                "" if mc.cones.equal else f"separating vector {mc.cones.separating_vector}")
        rep.add("slice_generator_audit", mc.audit.ok, True, mc.audit.ok,
                "" if mc.audit.ok else f"{len(mc.audit.mismatches)} pairing mismatches")
        rep.certificates["monoids"] = {
            "identification": mc.identification,
            "xi_lambda": mc.vinberg.xi_lambda.generators,
            "xi_lambda_raw": [{"omega": s.omega, "weight": s.weight, "pairing": s.pairing}
                              for s in mc.vinberg.generators],
            "xi_rho": mc.putcha_renner.xi_rho.generators,
            "xi_rho_dual": mc.putcha_renner.xi_rho_dual.generators,
            "dominant_generators": mc.putcha_renner.dominant_generators,
            "comparison": _cone_certificate(mc.cones),
        }
        t = time.perf_counter()
        xi = mc.putcha_renner.xi_rho
        fm = cone_from_generators(dual_generators_fm(xi.generators, xi.ambient_rank), xi.ambient_rank)
        agree = cones_equal(fm, mc.putcha_renner.xi_rho_dual).equal
        rep.timings["dual_oracle"] = time.perf_counter() - t
        rep.add("dual_oracle_agreement", agree, True, agree, "double description vs Fourier–Motzkin")
        if hilbert:
            from .cones import hilbert_basis
            rep.certificates["monoids"]["hilbert_basis_xi_lambda"] = hilbert_basis(mc.vinberg.xi_lambda)
    return data


def _iso_record(f: LatticeMap) -> dict:
    return {"matrix": f.matrix}


def run_fixture(f: Fixture) -> Report:
    start = time.perf_counter()
    rep = Report(f.name, f.g, f.lam, f.note)
    e = f.expected
    data = analyze_triple(rep, f.g, f.lam)
    if data is None:
        rep.timings["total"] = time.perf_counter() - start
        return rep
    cls = rep.certificates.setdefault("classification", {})

    rep.add("expected_dimension", data.dimension == e.rho_fp_weight_count, e.rho_fp_weight_count, data.dimension,
            "total multiplicity of ρ_fp weights")

    t = time.perf_counter()
    pd = product_decomposition_check(f.g, f.lam)
    rep.add("expected_product_decomposition", pd.holds == e.product_decomposition,
            e.product_decomposition, pd.holds)
    if pd.holds:
        cls["product_witness"] = {"matrix": pd.witness.matrix, "target": pd.target,
                                  "coroot_coefficients": pd.coroot_coefficients}

    if e.h_rho_witness is not None:
        ok = bool(verify_isomorphism(LatticeMap(e.h_rho_witness), data.h_rho, e.h_rho_target))
        rep.add("expected_h_rho_witness", ok, True, ok, f"explicit witness onto {e.h_rho_target_name}")
        cls["h_rho_witness"] = {"matrix": e.h_rho_witness, "target": e.h_rho_target,
                                "target_name": e.h_rho_target_name}
    if e.h_rho_target is not None and e.h_rho_witness is None:
        s = find_isomorphism(data.h_rho, e.h_rho_target)
        ok = s.found is not None
        detail = s.note
        if ok and e.d_fp_image is not None:
            img = s.found(data.d_fp)
            good = img == e.d_fp_image or img == tuple(-x for x in e.d_fp_image)
            rep.add("expected_d_fp_image", good, e.d_fp_image, img, "𝔡_fp maps to the character a (up to sign)")
        rep.add("expected_h_rho_isomorphism", ok, True, ok, f"{e.h_rho_target_name}: {detail}")
        if ok:
            cls["h_rho_isomorphism"] = {"matrix": s.found.matrix, "target": e.h_rho_target,
                                        "target_name": e.h_rho_target_name}

    qp = quotient_presentation_of_dual(f.g, f.lam)
    rep.add("quotient_presentation_matches_dual", qp.matches_h_rho_dual, True, qp.matches_h_rho_dual)
    cls["quotient_presentation"] = {
        "center_characters": qp.center_characters, "lambda_class": qp.lambda_class,
        "lambda_class_moduli": qp.lambda_class_moduli, "lattice_basis": qp.lattice_basis,
        "datum": qp.datum, "comparison": qp.comparison.matrix,
    }
    if e.dual_target is not None:
        s = find_isomorphism(qp.datum, e.dual_target)
        ok = s.found is not None
        rep.add("expected_dual_isomorphism", ok, True, ok, f"{e.dual_target_name}: {s.note}")
        if ok:
            cls["dual_isomorphism"] = {"matrix": s.found.matrix, "target": e.dual_target,
                                       "target_name": e.dual_target_name}
    if e.cokernel is not None:
        ck = cokernel_of_eta(f.g, f.lam)
        rep.add("expected_cokernel_of_eta", ck == e.cokernel, str(e.cokernel), str(ck))
    rep.timings["classification"] = time.perf_counter() - t
    rep.timings["total"] = time.perf_counter() - start
    return rep


def run_triple(name: str, g: RootDatum, lam: IntVector, monoid: bool = True, hilbert: bool = False) -> Report:
    start = time.perf_counter()
    rep = Report(name, g, tuple(lam))
    analyze_triple(rep, g, tuple(lam), monoid=monoid, hilbert=hilbert)
    rep.timings["total"] = time.perf_counter() - start
    return rep


def worker_count() -> int:
    return RunConfig().worker_count()


def run_fixtures(fixtures: Sequence[Fixture], parallel: bool = False,
                 config: RunConfig | None = None) -> list[Report]:
    """Run fixtures; in parallel mode they run in worker processes and reports stay in input order."""
    config = config or RunConfig(parallel=parallel)
    workers = config.worker_count()
    if not config.parallel or len(fixtures) < 2 or workers < 2:
        return [run_fixture(f) for f in fixtures]
    with ProcessPoolExecutor(max_workers=min(workers, len(fixtures))) as ex:
        return list(ex.map(run_fixture, fixtures))
