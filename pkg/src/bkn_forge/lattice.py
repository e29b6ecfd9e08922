"""Exact integer and rational linear algebra.

Everything here works on Python ints and ``fractions.Fraction``; there is no
floating point anywhere in the module. Matrices are immutable ``IntMatrix``
values, vectors are plain tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

IntVector = tuple[int, ...]
RatVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not match shape {self.rows}x{self.cols}")
        for r in self.entries:
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise TypeError(f"non-integer entry {x!r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        return cls(len(data), ncols, data)

    @classmethod
    def from_columns(cls, cols: Iterable[Sequence[int]], nrows: int | None = None) -> "IntMatrix":
        cols = [tuple(c) for c in cols]
        if nrows is None:
            if not cols:
                raise ValueError("nrows is required for a matrix with no columns")
            nrows = len(cols[0])
        return cls(nrows, len(cols), tuple(tuple(c[i] for c in cols) for i in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def column(self, j: int) -> IntVector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[IntVector]:
        return [self.column(j) for j in range(self.cols)]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        oc = other.columns()
        return IntMatrix(self.rows, other.cols,
                         tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in oc)
                               for r in self.entries))

    def apply(self, v: Sequence[int]) -> IntVector:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for matrix with {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


# ---------------------------------------------------------------------------
# small vector helpers

def dot(x: Sequence, y: Sequence):
    return sum(a * b for a, b in zip(x, y))


def vadd(x: Sequence, y: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Sequence, y: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x: Sequence) -> tuple:
    return tuple(c * a for a in x)


def primitive(v: Sequence) -> IntVector:
    """Clear denominators and divide by the gcd, keeping the direction (ray form)."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def canonical_line(v: Sequence) -> IntVector:
    """Primitive form with the first nonzero coordinate positive (line form)."""
    p = primitive(v)
    for x in p:
        if x != 0:
            return p if x > 0 else tuple(-y for y in p)
    return p


def is_integral(v: Iterable) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


# ---------------------------------------------------------------------------
# Smith normal form

def _snf_work(a: list[list[int]], m: int, n: int):
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c):  # row dst += c * row src
        if c:
            a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
            U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):  # col dst += c * col src
        if c:
            for r in a:
                r[dst] += c * r[src]
            for r in V:
                r[dst] += c * r[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
            # a smaller remainder in row/column t becomes the new pivot
            best = None
            for i in range(t + 1, m):
                if a[i][t] and (best is None or abs(a[i][t]) < best[0]):
                    best = (abs(a[i][t]), i, "r")
            for j in range(t + 1, n):
                if a[t][j] and (best is None or abs(a[t][j]) < best[0]):
                    best = (abs(a[t][j]), j, "c")
            if best is not None:
                done = False
                if best[2] == "r":
                    swap_rows(t, best[1])
                else:
                    swap_cols(t, best[1])
                continue
            # divisibility: pull an offending row into row t
            p = a[t][t]
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is not None:
                add_row(t, bad, 1)
                done = False
            if done:
                break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, a, V


def smith_normal_form(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, S, V) with U @ M @ V == S, U and V unimodular, S in Smith form."""
    m, n = M.rows, M.cols
    U, S, V = _snf_work([list(r) for r in M.entries], m, n)
    return (IntMatrix(m, m, tuple(map(tuple, U))),
            IntMatrix(m, n, tuple(map(tuple, S))),
            IntMatrix(n, n, tuple(map(tuple, V))))


def invariant_factors(M: IntMatrix) -> list[int]:
    _, S, _ = smith_normal_form(M)
    return [S.entries[i][i] for i in range(min(S.rows, S.cols)) if S.entries[i][i] != 0]


# ---------------------------------------------------------------------------
# Hermite normal form and friends

def hermite_normal_form(M: IntMatrix) -> IntMatrix:
    """Row-style HNF of the row lattice of ``M``; zero rows are dropped.

    Pivots are positive and strictly increase in column index; entries above a
    pivot are reduced into ``[0, pivot)``.
    """
    a = [list(r) for r in M.entries]
    n = M.cols
    out: list[list[int]] = []
    pivots: list[int] = []
    col = 0
    while a and col < n:
        nz = [r for r in a if r[col] != 0]
        if not nz:
            col += 1
            continue
        rest = [r for r in a if r[col] == 0]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            new = [p]
            for r in nz[1:]:
                q = r[col] // p[col]
                r = [x - q * y for x, y in zip(r, p)]
                if r[col] != 0:
                    new.append(r)
                elif any(r):
                    rest.append(r)
            nz = new
        p = nz[0]
        if p[col] < 0:
            p = [-x for x in p]
        out.append(p)
        pivots.append(col)
        a = [r for r in rest if any(r)]
        col += 1
    for k in range(len(out)):
        c = pivots[k]
        for i in range(k):
            q = out[i][c] // out[k][c]
            if q:
                out[i] = [x - q * y for x, y in zip(out[i], out[k])]
    return IntMatrix(len(out), n, tuple(map(tuple, out)))


def integer_kernel(M: IntMatrix) -> list[IntVector]:
    """Saturated basis of {v in Z^cols : M v = 0}, in Hermite form."""
    U, S, V = smith_normal_form(M)
    r = sum(1 for i in range(min(S.rows, S.cols)) if S.entries[i][i] != 0)
    basis = [V.column(j) for j in range(r, M.cols)]
    if not basis:
        return []
    return list(hermite_normal_form(IntMatrix.from_rows(basis, M.cols)).entries)


def solve_integer(M: IntMatrix, b: Sequence[int]) -> IntVector | None:
    """Some integer v with M v = b, or None when no integer solution exists.

    Raises ``ValueError`` on a dimension mismatch.
    """
    if len(b) != M.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {M.rows} rows")
    U, S, V = smith_normal_form(M)
    c = U.apply(b)
    y = [0] * M.cols
    for i in range(M.rows):
        d = S.entries[i][i] if i < M.cols else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d:
                return None
            y[i] = c[i] // d
    return V.apply(y)


def saturation(sublattice: Sequence[Sequence[int]], ambient_rank: int) -> list[IntVector]:
    """Basis of (Q-span of ``sublattice``) intersected with Z^ambient_rank."""
    vecs = [tuple(v) for v in sublattice]
    for v in vecs:
        if len(v) != ambient_rank:
            raise ValueError(f"vector {v} does not have {ambient_rank} coordinates")
    if not vecs:
        return []
    ann = integer_kernel(IntMatrix.from_rows(vecs, ambient_rank))
    if not ann:
        return [tuple(int(i == j) for j in range(ambient_rank)) for i in range(ambient_rank)]
    return integer_kernel(IntMatrix.from_rows(ann, ambient_rank))


def lattice_basis(vectors: Sequence[Sequence[int]], ambient_rank: int) -> list[IntVector]:
    """Hermite basis of the Z-span of ``vectors``."""
    if not vectors:
        return []
    return list(hermite_normal_form(IntMatrix.from_rows(vectors, ambient_rank)).entries)


@dataclass(frozen=True)
class QuotientStructure:
    """Isomorphism type Z^free_rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ..."""

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
        for d, e in zip(self.torsion, self.torsion[1:]):
            if e % d:
                raise ValueError(f"divisibility chain broken: {d} does not divide {e}")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        """Order of the group, or None when infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def quotient_structure(ambient_rank: int, sublattice: Sequence[Sequence[int]]) -> QuotientStructure:
    """Z^ambient_rank / span_Z(sublattice) via Smith normal form."""
    vecs = [tuple(v) for v in sublattice]
    for v in vecs:
        if len(v) != ambient_rank:
            raise ValueError(f"vector {v} does not have {ambient_rank} coordinates")
    if not vecs:
        return QuotientStructure(ambient_rank, ())
    d = invariant_factors(IntMatrix.from_rows(vecs, ambient_rank))
    return QuotientStructure(ambient_rank - len(d), tuple(x for x in d if x > 1))


# ---------------------------------------------------------------------------
# rational linear algebra

def determinant(M: IntMatrix) -> int:
    """Bareiss fraction-free determinant."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return 1
    a = [list(r) for r in M.entries]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_unimodular(M: IntMatrix) -> bool:
    return M.rows == M.cols and abs(determinant(M)) == 1


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def rational_kernel(rows: Sequence[Sequence], ncols: int) -> list[RatVector]:
    """Basis of {v in Q^ncols : <row, v> = 0 for every row}."""
    red, piv = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        out.append(tuple(v))
    return out


def rational_solve(A: Sequence[Sequence], b: Sequence) -> RatVector | None:
    """Some rational x with A x = b, or None."""
    m = len(A)
    if len(b) != m:
        raise ValueError("dimension mismatch")
    n = len(A[0]) if m else 0
    aug = [list(A[i]) + [b[i]] for i in range(m)]
    red, piv = rref(aug, n + 1)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(red, piv):
        x[p] = row[n]
    return tuple(x)


def unimodular_inverse(M: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular integer matrix."""
    n = M.rows
    if not is_unimodular(M):
        raise ValueError("matrix is not unimodular")
    aug = [list(M.entries[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    red, _ = rref(aug, 2 * n)
    inv = [[int(x) for x in r[n:]] for r in red]
    return IntMatrix.from_rows(inv, n)
