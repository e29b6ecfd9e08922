"""Root data of split reductive groups.

A ``RootDatum`` stores the character lattice X = Z^rank, the roots (vectors in
X) and the coroots (vectors in X^vee = Z^rank) as parallel tuples; the pairing
is the standard dot product. Named groups use these coordinates:

* ``gl(n)``:  X = Z^n, roots and coroots e_i - e_j.
* ``sl(n)``:  simply connected, X = P in fundamental-weight coordinates,
  X^vee = Q^vee in simple-coroot coordinates.
* ``pgl(n)``: ``dual(sl(n))``.
* ``sp(2n)``: X = Z^n, long roots +-2e_i with coroots +-e_i, short roots
  +-e_i +- e_j with equal coroots.
* ``so_odd(n)``: ``dual(sp(2n))``, the adjoint group of type B_n.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from .lattice import (
    IntMatrix,
    IntVector,
    QuotientStructure,
    RatVector,
    dot,
    integer_kernel,
    is_unimodular,
    quotient_structure,
    rational_solve,
    solve_integer,
    unimodular_inverse,
)


@dataclass(frozen=True)
class RootDatum:
    rank: int
    roots: tuple[IntVector, ...]
    coroots: tuple[IntVector, ...]

    def __post_init__(self) -> None:
        if len(self.roots) != len(self.coroots):
            raise ValueError("roots and coroots must be in bijection")
        for v in self.roots + self.coroots:
            if len(v) != self.rank:
                raise ValueError(f"vector {v} does not have {self.rank} coordinates")

    @classmethod
    def from_lists(cls, rank: int, roots: Sequence[Sequence[int]], coroots: Sequence[Sequence[int]]) -> "RootDatum":
        return cls(rank, tuple(tuple(int(x) for x in r) for r in roots),
                   tuple(tuple(int(x) for x in c) for c in coroots))

    def pairs(self) -> frozenset[tuple[IntVector, IntVector]]:
        return frozenset(zip(self.roots, self.coroots))

    def index_of(self, root: Sequence[int]) -> int | None:
        return self._root_index.get(tuple(root))

    @cached_property
    def _root_index(self) -> dict[IntVector, int]:
        return {r: i for i, r in enumerate(self.roots)}

    def coroot_of(self, root: Sequence[int]) -> IntVector:
        i = self.index_of(root)
        if i is None:
            raise KeyError(f"{tuple(root)} is not a root")
        return self.coroots[i]


def same_datum(a: RootDatum, b: RootDatum) -> bool:
    """Equality of root data up to the order in which roots are listed."""
    return a.rank == b.rank and a.pairs() == b.pairs()


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def validate_root_datum(rd: RootDatum) -> ValidationReport:
    """Check the root datum axioms; every broken axiom is listed with its indices."""
    fails: list[str] = []
    index = {}
    for i, a in enumerate(rd.roots):
        if not any(a):
            fails.append(f"index {i}: zero root")
        if a in index:
            fails.append(f"index {i}: duplicate of root {index[a]}")
        index.setdefault(a, i)
    for i, (a, c) in enumerate(zip(rd.roots, rd.coroots)):
        p = dot(a, c)
        if p != 2:
            fails.append(f"index {i}: ⟨α,α∨⟩ = {p} ≠ 2")
    for i, a in enumerate(rd.roots):
        neg = tuple(-x for x in a)
        j = index.get(neg)
        if j is None:
            fails.append(f"index {i}: -α is not a root")
        elif rd.coroots[j] != tuple(-x for x in rd.coroots[i]):
            fails.append(f"index {i}: coroot of -α is not -α∨")
        dbl = tuple(2 * x for x in a)
        if dbl in index:
            fails.append(f"index {i}: 2α is a root (non-reduced)")
    for i, (ai, ci) in enumerate(zip(rd.roots, rd.coroots)):
        for j, (aj, cj) in enumerate(zip(rd.roots, rd.coroots)):
            img = tuple(x - dot(aj, ci) * y for x, y in zip(aj, ai))
            k = index.get(img)
            if k is None:
                fails.append(f"indices {i},{j}: s_α{i}(α{j}) is not a root")
                continue
            coimg = tuple(x - dot(ai, cj) * y for x, y in zip(cj, ci))
            if rd.coroots[k] != coimg:
                fails.append(f"indices {i},{j}: s_α{i}∨(α{j}∨) is not the coroot of s_α{i}(α{j})")
    return ValidationReport(not fails, tuple(fails))


def dual(rd: RootDatum) -> RootDatum:
    return RootDatum(rd.rank, rd.coroots, rd.roots)


# ---------------------------------------------------------------------------
# bases

def _positive_key(v: Sequence[int]) -> tuple[int, ...]:
    return (sum(v),) + tuple(v)


def _is_positive(v: Sequence[int]) -> bool:
    for x in _positive_key(v):
        if x:
            return x > 0
    return False


@dataclass(frozen=True)
class BasedRootDatum:
    datum: RootDatum
    positive: tuple[int, ...]
    simple: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def simple_roots(self) -> tuple[IntVector, ...]:
        return tuple(self.datum.roots[i] for i in self.simple)

    @property
    def simple_coroots(self) -> tuple[IntVector, ...]:
        return tuple(self.datum.coroots[i] for i in self.simple)

    @property
    def positive_roots(self) -> tuple[IntVector, ...]:
        return tuple(self.datum.roots[i] for i in self.positive)

    @property
    def positive_coroots(self) -> tuple[IntVector, ...]:
        return tuple(self.datum.coroots[i] for i in self.positive)

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        """cartan[i][j] = ⟨α_i, α_j∨⟩; row i is α_i in fundamental-weight coordinates."""
        return tuple(tuple(dot(a, c) for c in self.simple_coroots) for a in self.simple_roots)

    def simple_coordinates(self, v: Sequence) -> RatVector:
        """Coefficients of v (in Q·span Δ) on the simple roots."""
        if not self.simple:
            if any(v):
                raise ValueError(f"{tuple(v)} is not in the root span")
            return ()
        A = [[a[k] for a in self.simple_roots] for k in range(self.rank)]
        x = rational_solve(A, list(v))
        if x is None:
            raise ValueError(f"{tuple(v)} is not in the root span")
        return x


def base_with_positive(rd: RootDatum, positive: Sequence[int]) -> BasedRootDatum:
    """Based datum for an explicit positive system; simple roots = indecomposables."""
    pos = tuple(sorted(positive))
    posset = {rd.roots[i] for i in pos}
    sums = {tuple(x + y for x, y in zip(a, b)) for a in posset for b in posset}
    simple = tuple(i for i in pos if rd.roots[i] not in sums)
    return BasedRootDatum(rd, pos, simple)


@lru_cache(maxsize=None)
def base(rd: RootDatum) -> BasedRootDatum:
    """Positive system cut out by the sum-of-coordinates functional, lexicographic tie-break."""
    return base_with_positive(rd, [i for i, a in enumerate(rd.roots) if _is_positive(a)])


def dual_based(b: BasedRootDatum) -> BasedRootDatum:
    """The dual datum, with the coroots of positive roots as positive system."""
    return BasedRootDatum(dual(b.datum), b.positive, b.simple)


# ---------------------------------------------------------------------------
# Cartan type recognition

@dataclass(frozen=True)
class CartanComponent:
    cartan_type: str
    simple: tuple[int, ...]  # positions into BasedRootDatum.simple


@dataclass(frozen=True)
class CartanDecomposition:
    components: tuple[CartanComponent, ...]

    @property
    def types(self) -> tuple[str, ...]:
        return tuple(sorted(c.cartan_type for c in self.components))


class CartanTypeError(ValueError):
    pass


def standard_cartan(cartan_type: str) -> tuple[tuple[int, ...], ...]:
    """Standard Cartan matrix (row i = ⟨α_i, α_j∨⟩) with Bourbaki numbering."""
    letter, n = cartan_type[0], int(cartan_type[1:])
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a_ij=-1, a_ji=-1):
        C[i][j], C[j][i] = a_ij, a_ji

    if letter in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if letter == "B" and n >= 2:
            link(n - 2, n - 1, -2, -1)  # α_n short
        if letter == "C" and n >= 2:
            link(n - 2, n - 1, -1, -2)  # α_n long
    elif letter == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif letter == "G":
        link(0, 1, -1, -3)
    else:
        raise CartanTypeError(f"unknown type {cartan_type}")
    return tuple(map(tuple, C))


def _match_permutation(C: Sequence[Sequence[int]], D: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """A permutation p with C[i][j] == D[p[i]][p[j]], by backtracking."""
    n = len(C)
    if len(D) != n:
        return None
    perm: list[int] = []
    used = [False] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        for k in range(n):
            if used[k]:
                continue
            if all(C[i][j] == D[k][perm[j]] and C[j][i] == D[perm[j]][k] for j in range(i)) and C[i][i] == D[k][k]:
                used[k] = True
                perm.append(k)
                if rec(i + 1):
                    return True
                perm.pop()
                used[k] = False
        return False

    return tuple(perm) if rec(0) else None


def _classify_connected(C: Sequence[Sequence[int]]) -> str:
    n = len(C)
    if n == 1:
        return "A1"
    prods = {(i, j): C[i][j] * C[j][i] for i in range(n) for j in range(i + 1, n) if C[i][j] or C[j][i]}
    if any(p not in (1, 2, 3) for p in prods.values()) or len(prods) != n - 1:
        raise CartanTypeError("Cartan matrix is not of finite type")
    degree = [0] * n
    for i, j in prods:
        degree[i] += 1
        degree[j] += 1
    if 3 in prods.values():
        guess = ["G2"]
    elif 2 in prods.values():
        (i, j), = [e for e, p in prods.items() if p == 2]
        long_end = i if C[i][j] == -2 else j
        if n == 2:
            guess = ["C2"]
        elif n == 4 and degree[i] == 2 and degree[j] == 2:
            guess = ["F4"]
        else:
            guess = ["C%d" % n if degree[long_end] == 1 else "B%d" % n]
    elif max(degree) <= 2:
        guess = ["A%d" % n]
    else:
        guess = ["D%d" % n] + (["E%d" % n] if n in (6, 7, 8) else [])
    for g in guess:
        if _match_permutation(C, standard_cartan(g)) is not None:
            return g
    raise CartanTypeError("unrecognised Cartan matrix")


def simple_factors(b: BasedRootDatum) -> CartanDecomposition:
    C = b.cartan
    n = len(C)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and (C[i][j] or C[j][i]):
                    seen[j] = True
                    stack.append(j)
        comp.sort()
        sub = [[C[i][j] for j in comp] for i in comp]
        comps.append(CartanComponent(_classify_connected(sub), tuple(comp)))
    return CartanDecomposition(tuple(comps))


# ---------------------------------------------------------------------------
# weights and structural invariants

def fundamental_weights(b: BasedRootDatum) -> tuple[RatVector, ...]:
    """ω_i in Q ⊗ X with ⟨ω_i, α_j∨⟩ = δ_ij, lying in the Q-span of the roots."""
    C = b.cartan
    n = len(C)
    out = []
    for i in range(n):
        # ω_i = Σ_k c_k α_k with Σ_k c_k C[k][j] = δ_ij
        A = [[C[k][j] for k in range(n)] for j in range(n)]
        c = rational_solve(A, [int(i == j) for j in range(n)])
        out.append(tuple(sum((c[k] * b.simple_roots[k][t] for k in range(n)), Fraction(0))
                         for t in range(b.rank)))
    return tuple(out)


def fundamental_group_of_derived(rd: RootDatum) -> QuotientStructure:
    """(X∨ ∩ Q·Φ∨) / Z·Φ∨: trivial exactly when the derived group is simply connected."""
    q = quotient_structure(rd.rank, rd.coroots)
    return QuotientStructure(0, q.torsion)


def center_character_group(rd: RootDatum) -> QuotientStructure:
    """X / Z·Φ = X*(Z(G))."""
    return quotient_structure(rd.rank, rd.roots)


def simply_connected_derived(b: BasedRootDatum) -> BasedRootDatum:
    """Root datum of the simply connected cover of the derived group.

    X = P in fundamental-weight coordinates (root α ↦ (⟨α, α_j∨⟩)_j) and
    X∨ = Q∨ in simple-coroot coordinates. Root order and positivity follow ``b``.
    """
    sc = b.simple_coroots
    l = len(sc)
    M = IntMatrix.from_columns(sc, b.rank) if l else None
    roots, coroots = [], []
    for a, c in zip(b.datum.roots, b.datum.coroots):
        roots.append(tuple(dot(a, s) for s in sc))
        x = solve_integer(M, c)
        if x is None:
            raise ValueError(f"coroot {c} is not an integer combination of simple coroots")
        coroots.append(x)
    return BasedRootDatum(RootDatum(l, tuple(roots), tuple(coroots)), b.positive, b.simple)


def sublattice_datum(rd: RootDatum, basis: Sequence[Sequence[int]]) -> RootDatum:
    """Datum of the isogenous group whose character lattice is the span of ``basis`` ⊂ X.

    The roots must lie in the sublattice; coroots are expressed in the dual basis.
    """
    basis = [tuple(v) for v in basis]
    if len(basis) != rd.rank:
        raise ValueError("sublattice must have full rank")
    B = IntMatrix.from_columns(basis, rd.rank)
    roots = []
    for a in rd.roots:
        x = solve_integer(B, a)
        if x is None:
            raise ValueError(f"root {a} is not in the sublattice")
        roots.append(x)
    coroots = [tuple(dot(v, c) for v in basis) for c in rd.coroots]
    return RootDatum(rd.rank, tuple(roots), tuple(coroots))


# ---------------------------------------------------------------------------
# named constructors

def gl(n: int) -> RootDatum:
    if n < 1:
        raise ValueError("gl(n) needs n >= 1")
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = [0] * n
                v[i], v[j] = 1, -1
                roots.append(tuple(v))
    return RootDatum(n, tuple(roots), tuple(roots))


def from_cartan_simply_connected(cartan: Sequence[Sequence[int]]) -> RootDatum:
    """Simply connected datum of a Cartan matrix: X = P (ω-coordinates), X∨ = Q∨."""
    l = len(cartan)
    C = [tuple(r) for r in cartan]
    start = []
    for i in range(l):
        e = tuple(int(i == j) for j in range(l))
        start.append((C[i], e))
    seen = set(start)
    frontier = list(start)
    while frontier:
        nxt = []
        for a, c in frontier:
            for i in range(l):
                # s_i on P: v - v_i α_i ; on Q∨: c - ⟨α_i, c⟩ e_i
                na = tuple(x - a[i] * y for x, y in zip(a, C[i]))
                pair_i = sum(C[i][j] * c[j] for j in range(l))
                nc = tuple(x - pair_i * int(k == i) for k, x in enumerate(c))
                if (na, nc) not in seen:
                    seen.add((na, nc))
                    nxt.append((na, nc))
        frontier = nxt
    pairs = sorted(seen)
    return RootDatum(l, tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


def sl(n: int) -> RootDatum:
    if n < 2:
        raise ValueError("sl(n) needs n >= 2")
    return from_cartan_simply_connected(standard_cartan("A%d" % (n - 1)))


def pgl(n: int) -> RootDatum:
    if n < 2:
        raise ValueError("pgl(n) needs n >= 2")
    return dual(sl(n))


def sp(two_n: int) -> RootDatum:
    if two_n < 2 or two_n % 2:
        raise ValueError("sp(2n) needs an even argument >= 2")
    n = two_n // 2
    roots, coroots = [], []
    for i in range(n):
        for s in (1, -1):
            v = [0] * n
            v[i] = 2 * s
            c = [0] * n
            c[i] = s
            roots.append(tuple(v))
            coroots.append(tuple(c))
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [0] * n
                    v[i], v[j] = si, sj
                    roots.append(tuple(v))
                    coroots.append(tuple(v))
    return RootDatum(n, tuple(roots), tuple(coroots))


def so_odd(n: int) -> RootDatum:
    """Adjoint SO_{2n+1} (type B_n), built as the dual of sp(2n)."""
    if n < 1:
        raise ValueError("so_odd(n) needs n >= 1")
    return dual(sp(2 * n))


def torus(r: int) -> RootDatum:
    if r < 0:
        raise ValueError("torus rank must be nonnegative")
    return RootDatum(r, (), ())


def gm() -> RootDatum:
    return torus(1)


def direct_product(a: RootDatum, b: RootDatum) -> RootDatum:
    za, zb = (0,) * a.rank, (0,) * b.rank
    roots = tuple(r + zb for r in a.roots) + tuple(za + r for r in b.roots)
    coroots = tuple(c + zb for c in a.coroots) + tuple(za + c for c in b.coroots)
    return RootDatum(a.rank + b.rank, roots, coroots)


NAMED = {
    "gl": gl,
    "sl": sl,
    "pgl": pgl,
    "sp": lambda n: sp(2 * n),
    "so_odd": so_odd,
    "torus": torus,
    "gm": lambda n=1: gm(),
}


def named(name: str, n: int | None = None) -> RootDatum:
    """Named group; for ``sp`` the argument is n in Sp_{2n}."""
    try:
        ctor = NAMED[name]
    except KeyError:
        raise ValueError(f"unknown group name {name!r}") from None
    if name == "gm":
        return gm()
    if n is None:
        raise ValueError(f"group {name!r} needs an integer n")
    return ctor(n)


# ---------------------------------------------------------------------------
# morphisms

@dataclass(frozen=True)
class LatticeMap:
    """Linear map X_source → X_target given by an integer matrix (x ↦ M x)."""

    matrix: IntMatrix

    @property
    def source_rank(self) -> int:
        return self.matrix.cols

    @property
    def target_rank(self) -> int:
        return self.matrix.rows

    def __call__(self, v: Sequence[int]) -> IntVector:
        return self.matrix.apply(v)

    def transpose(self, u: Sequence[int]) -> IntVector:
        """Induced map on cocharacters, X_target∨ → X_source∨."""
        return self.matrix.T.apply(u)

    def compose(self, other: "LatticeMap") -> "LatticeMap":
        """self ∘ other."""
        return LatticeMap(self.matrix @ other.matrix)

    def inverse(self) -> "LatticeMap":
        return LatticeMap(unimodular_inverse(self.matrix))

    @classmethod
    def identity(cls, n: int) -> "LatticeMap":
        return cls(IntMatrix.identity(n))


@dataclass(frozen=True)
class IsomorphismCertificate:
    ok: bool
    reason: str
    root_permutation: tuple[int, ...] = ()  # root i of rd1 ↦ root root_permutation[i] of rd2

    def __bool__(self) -> bool:
        return self.ok


def verify_isomorphism(f: LatticeMap, rd1: RootDatum, rd2: RootDatum) -> IsomorphismCertificate:
    """Check that f: X1 → X2 is an isomorphism of root data.

    f must be unimodular, carry Φ1 bijectively onto Φ2, and its inverse
    transpose must carry each coroot to the coroot of the image root.
    """
    if rd1.rank != rd2.rank:
        raise ValueError(f"rank mismatch: {rd1.rank} vs {rd2.rank}")
    M = f.matrix
    if M.rows != rd2.rank or M.cols != rd1.rank:
        raise ValueError("map shape does not match the root data")
    if not is_unimodular(M):
        return IsomorphismCertificate(False, "matrix is not unimodular")
    if len(rd1.roots) != len(rd2.roots):
        return IsomorphismCertificate(False, "different numbers of roots")
    MT = M.T
    perm = []
    for i, (a, c) in enumerate(zip(rd1.roots, rd1.coroots)):
        img = M.apply(a)
        j = rd2.index_of(img)
        if j is None:
            return IsomorphismCertificate(False, f"root {i} {a} maps to non-root {img}")
        # inverse transpose carries c to rd2.coroots[j]  ⟺  M^T rd2.coroots[j] == c
        if MT.apply(rd2.coroots[j]) != c:
            return IsomorphismCertificate(False, f"coroot of root {i} does not map to the matching coroot")
        perm.append(j)
    if len(set(perm)) != len(perm):
        return IsomorphismCertificate(False, "root map is not injective")
    return IsomorphismCertificate(True, "verified", tuple(perm))


@dataclass(frozen=True)
class IsomorphismSearch:
    found: LatticeMap | None
    conclusive: bool
    note: str


def _shells(k: int, bound: int):
    """Integer vectors in [-bound, bound]^k ordered by max-norm, then lexicographically."""
    yield (0,) * k
    for r in range(1, bound + 1):
        for v in itertools.product(range(-r, r + 1), repeat=k):
            if max(abs(x) for x in v) == r:
                yield v


def find_isomorphism(rd1: RootDatum, rd2: RootDatum, search_bound: int = 2) -> IsomorphismSearch:
    """Bounded search for a root-datum isomorphism X1 → X2.

    Simple roots are matched along Cartan-matrix preserving bijections; the
    remaining central freedom is enumerated with coefficients bounded by
    ``search_bound``. A miss is only conclusive when a lattice invariant
    (center, fundamental group, Cartan types) already differs.
    """
    if rd1.rank != rd2.rank:
        raise ValueError(f"rank mismatch: {rd1.rank} vs {rd2.rank}")
    r = rd1.rank
    if len(rd1.roots) != len(rd2.roots):
        return IsomorphismSearch(None, True, "different numbers of roots")
    if center_character_group(rd1) != center_character_group(rd2):
        return IsomorphismSearch(None, True, "center character groups differ")
    if fundamental_group_of_derived(rd1) != fundamental_group_of_derived(rd2):
        return IsomorphismSearch(None, True, "fundamental groups of the derived groups differ")
    if center_character_group(dual(rd1)) != center_character_group(dual(rd2)):
        return IsomorphismSearch(None, True, "dual center character groups differ")
    ident = LatticeMap.identity(r)
    if verify_isomorphism(ident, rd1, rd2):
        return IsomorphismSearch(ident, True, "identity is an isomorphism")
    b1, b2 = base(rd1), base(rd2)
    if simple_factors(b1).types != simple_factors(b2).types:
        return IsomorphismSearch(None, True, "Cartan types differ")
    C1, C2 = b1.cartan, b2.cartan
    l = len(C1)
    sigmas = []
    for p in itertools.permutations(range(l)):
        if all(C1[i][j] == C2[p[i]][p[j]] for i in range(l) for j in range(l)):
            sigmas.append(p)
    nvar = r * r
    for sigma in sigmas:
        rows, rhs = [], []
        for i in range(l):
            a, ac = b1.simple_roots[i], b1.simple_coroots[i]
            bt, btc = b2.simple_roots[sigma[i]], b2.simple_coroots[sigma[i]]
            for p in range(r):  # (M a)_p = bt_p
                row = [0] * nvar
                for q in range(r):
                    row[p * r + q] = a[q]
                rows.append(row)
                rhs.append(bt[p])
            for q in range(r):  # (M^T btc)_q = ac_q
                row = [0] * nvar
                for p in range(r):
                    row[p * r + q] = btc[p]
                rows.append(row)
                rhs.append(ac[q])
        if rows:
            A = IntMatrix.from_rows(rows, nvar)
            x0 = solve_integer(A, rhs)
            if x0 is None:
                continue
            kernel = integer_kernel(A)
        else:
            x0 = (0,) * nvar
            kernel = [tuple(int(i == j) for j in range(nvar)) for i in range(nvar)]
        for coeffs in _shells(len(kernel), search_bound):
            x = list(x0)
            for c, v in zip(coeffs, kernel):
                if c:
                    x = [xi + c * vi for xi, vi in zip(x, v)]
            M = IntMatrix.from_rows([x[p * r:(p + 1) * r] for p in range(r)], r) if r else IntMatrix.zero(0, 0)
            f = LatticeMap(M)
            if is_unimodular(M) and verify_isomorphism(f, rd1, rd2):
                return IsomorphismSearch(f, True, "verified isomorphism found")
    return IsomorphismSearch(None, False,
                             f"no isomorphism found with search bound {search_bound}; not a proof of non-isomorphism")
