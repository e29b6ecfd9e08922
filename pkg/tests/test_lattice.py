import random

from hypothesis import given, strategies as st

from bkn_forge.lattice import (
    IntMatrix,
    QuotientStructure,
    canonical_line,
    determinant,
    hermite_normal_form,
    integer_kernel,
    is_unimodular,
    primitive,
    quotient_structure,
    rational_solve,
    saturation,
    smith_normal_form,
    solve_integer,
    unimodular_inverse,
)


def matrices(max_dim=6, lo=-9, hi=9):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=m, max_size=m)
            .map(lambda rows: IntMatrix.from_rows(rows, n))))


def is_diagonal_chain(S):
    d = []
    for i in range(S.rows):
        for j in range(S.cols):
            if i != j and S.entries[i][j]:
                return False
    d = [S.entries[i][i] for i in range(min(S.rows, S.cols))]
    if any(x < 0 for x in d):
        return False
    nz = [x for x in d if x]
    if d[:len(nz)] != nz:
        return False
    return all(b % a == 0 for a, b in zip(nz, nz[1:]))


def test_snf_small_example():
    U, S, V = smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]]))
    assert S.tolist() == [[2, 0], [0, 4]]
    assert (U @ IntMatrix.from_rows([[2, 4], [6, 8]]) @ V) == S


def test_snf_identity_and_zero():
    I = IntMatrix.identity(3)
    assert smith_normal_form(I)[1] == I
    Z = IntMatrix.zero(2, 3)
    assert smith_normal_form(Z)[1] == Z


@given(matrices())
def test_snf_reconstruction(M):
    U, S, V = smith_normal_form(M)
    assert U @ M @ V == S
    assert is_unimodular(U) and is_unimodular(V)
    assert is_diagonal_chain(S)


def test_snf_is_deterministic():
    M = IntMatrix.from_rows([[3, 6, 9], [4, -2, 7], [0, 5, 5]])
    assert smith_normal_form(M) == smith_normal_form(M)


def test_kernel_examples():
    assert integer_kernel(IntMatrix.from_rows([[1, 1]])) == [(1, -1)]
    assert integer_kernel(IntMatrix.identity(3)) == []
    assert len(integer_kernel(IntMatrix.from_rows([[0, 0]]))) == 2


@given(matrices(max_dim=5))
def test_kernel_is_saturated_and_annihilated(M):
    K = integer_kernel(M)
    for v in K:
        assert M.apply(v) == (0,) * M.rows
    if K:
        q = quotient_structure(M.cols, K)
        assert q.torsion == ()
        assert q.free_rank == M.cols - len(K)


def test_quotient_examples():
    assert quotient_structure(1, [(2,)]) == QuotientStructure(0, (2,))
    assert quotient_structure(2, []) == QuotientStructure(2, ())
    assert quotient_structure(2, [(1, -1)]) == QuotientStructure(1, ())


def test_quotient_structure_rejects_bad_chain():
    import pytest
    with pytest.raises(ValueError):
        QuotientStructure(0, (2, 3))
    with pytest.raises(ValueError):
        QuotientStructure(0, (1,))


@given(matrices(max_dim=4, lo=-5, hi=5), st.randoms(use_true_random=False))
def test_quotient_invariant_under_unimodular_recombination(M, rnd):
    rows = [list(r) for r in M.tolist()]
    k = len(rows)
    # random elementary operations on the generating set
    for _ in range(6):
        i, j = rnd.randrange(k), rnd.randrange(k)
        if i != j:
            c = rnd.randint(-3, 3)
            rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
        elif rnd.random() < 0.5:
            rows[i] = [-a for a in rows[i]]
    assert quotient_structure(M.cols, M.tolist()) == quotient_structure(M.cols, rows)


def test_solve_integer():
    assert solve_integer(IntMatrix.from_rows([[2]]), (3,)) is None
    assert solve_integer(IntMatrix.identity(3), (4, -1, 7)) == (4, -1, 7)
    M = IntMatrix.from_rows([[2, 1], [0, 3]])
    x = solve_integer(M, (5, 3))
    assert M.apply(x) == (5, 3)


def test_solve_integer_dimension_mismatch_is_an_error():
    import pytest
    with pytest.raises(ValueError):
        solve_integer(IntMatrix.identity(2), (1, 2, 3))


def test_saturation_and_hnf():
    assert saturation([(2, 0)], 2) == [(1, 0)]
    H = hermite_normal_form(IntMatrix.from_rows([[2, 4], [1, 3]]))
    H2 = hermite_normal_form(IntMatrix.from_rows([[1, 3], [3, 7]]))
    assert H == H2  # same row lattice, same canonical form


def test_primitive_conventions():
    assert primitive((0, -4, 6)) == (0, -2, 3)
    assert canonical_line((0, -4, 6)) == (0, 2, -3)
    assert primitive((2, 4)) == (1, 2)


def test_determinant_and_inverse():
    M = IntMatrix.from_rows([[2, 1], [1, 1]])
    assert determinant(M) == 1
    assert unimodular_inverse(M) @ M == IntMatrix.identity(2)


def test_rational_solve():
    from fractions import Fraction
    assert rational_solve([[2, 0], [0, 4]], [1, 1]) == (Fraction(1, 2), Fraction(1, 4))
    assert rational_solve([[1, 1], [1, 1]], [1, 2]) is None


def test_random_snf_batch_frozen_seed():
    rng = random.Random(7)
    for _ in range(50):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        M = IntMatrix.from_rows([[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)], n)
        U, S, V = smith_normal_form(M)
        assert U @ M @ V == S
        if m == n:
            prod = 1
            for i in range(n):
                prod *= S.entries[i][i]
            assert abs(determinant(M)) == prod
