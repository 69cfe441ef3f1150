"""Exact linear algebra kernels: frozen examples and algebraic properties."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from singequiv.fields import QQ, GF, FieldSpec
from singequiv.linalg import Matrix, Subspace, Echelon, hstack, vec_is_zero

F5 = GF(5)


def mat(rows, field=QQ):
    return Matrix(field, rows)


# -- rref ------------------------------------------------------------------

def test_rref_identity():
    m = Matrix.identity(QQ, 3)
    r, rank, pivots = m.rref()
    assert r == m and rank == 3 and pivots == (0, 1, 2)


def test_rref_zero():
    m = Matrix.zeros(QQ, 2, 4)
    r, rank, pivots = m.rref()
    assert r == m and rank == 0 and pivots == ()


def test_rref_rank_one():
    # hand Gaussian elimination: row2 - 2*row1 leaves a zero row
    m = mat([[1, 2], [2, 4]])
    r, rank, _ = m.rref()
    assert r == mat([[1, 2], [0, 0]])
    assert rank == 1


def test_rref_prime_field_normalizes_pivot():
    m = mat([[2, 1], [0, 3]], F5)
    r, rank, _ = m.rref()
    assert rank == 2
    assert r == Matrix.identity(F5, 2)


# -- kernel ----------------------------------------------------------------

def test_kernel_identity_is_zero():
    assert Matrix.identity(QQ, 4).kernel().dim == 0


def test_kernel_zero_map_is_everything():
    k = Matrix.zeros(QQ, 2, 3).kernel()
    assert k == Subspace.full(QQ, 3)


def test_kernel_over_f5():
    # x + 2y = 0 mod 5 has solution line through (3, 1) = rref of (-2, 1)
    k = mat([[1, 2]], F5).kernel()
    assert k.dim == 1
    assert k.contains((3, 1))
    assert k.basis == ((1, 2),)  # (3,1) scaled by 3^{-1} = 2


def test_kernel_vectors_are_killed():
    m = mat([[1, 2, 3], [4, 5, 6]])
    k = m.kernel()
    assert k.dim == 1
    for row in k.basis:
        assert vec_is_zero(m.mv(row))


# -- solve -----------------------------------------------------------------

def test_solve_identity():
    m = Matrix.identity(QQ, 3)
    b = (Fraction(1), Fraction(2), Fraction(3))
    assert m.solve(b) == b


def test_solve_no_solution():
    m = Matrix.zeros(QQ, 2, 2)
    assert m.solve((1, 0)) is None


def test_solve_free_vars_zeroed():
    # rref back-substitution with the free variable pinned to 0
    m = mat([[1, 1], [0, 0]])
    assert m.solve((2, 0)) == (2, 0)


def test_solve_matrix_consistent():
    m = mat([[1, 2], [3, 4]])
    x = m.solve_matrix(Matrix.identity(QQ, 2))
    assert m @ x == Matrix.identity(QQ, 2)


# -- kronecker -------------------------------------------------------------

def test_kron_identities():
    assert Matrix.identity(QQ, 2).kron(Matrix.identity(QQ, 3)) == Matrix.identity(QQ, 6)


def test_kron_with_zero_block():
    a = mat([[1, 2], [3, 4]])
    z = Matrix.zeros(QQ, 1, 1)
    assert a.kron(z).is_zero()


def test_kron_scalar_case():
    assert mat([[2]]).kron(mat([[1, 1]])) == mat([[2, 2]])


def test_kron_index_contract():
    # (a (x) b)[(i*rows_b+u), (j*cols_b+v)] = a[i,j] * b[u,v]
    a = mat([[1, 2], [3, 4]])
    b = mat([[5, 6, 7]])
    k = a.kron(b)
    for i in range(2):
        for j in range(2):
            for u in range(1):
                for v in range(3):
                    assert k.entry(i * 1 + u, j * 3 + v) == a.entry(i, j) * b.entry(u, v)


# -- property tests --------------------------------------------------------

scalars = st.integers(min_value=-4, max_value=4)


def matrices(field, max_dim=4):
    return st.integers(1, max_dim).flatmap(
        lambda n: st.integers(1, max_dim).flatmap(
            lambda m: st.lists(
                st.lists(scalars, min_size=m, max_size=m), min_size=n, max_size=n
            ).map(lambda rows: Matrix(field, rows))
        )
    )


@settings(max_examples=60, deadline=None)
@given(matrices(QQ))
def test_rref_idempotent(m):
    r, _, _ = m.rref()
    assert r.rref()[0] == r


@settings(max_examples=60, deadline=None)
@given(matrices(GF(5)))
def test_rank_nullity(m):
    assert m.kernel().dim + m.rank() == m.ncols


@settings(max_examples=40, deadline=None)
@given(matrices(QQ, 3), matrices(QQ, 3))
def test_kron_rank_multiplicative(a, b):
    assert a.kron(b).rank() == a.rank() * b.rank()


@settings(max_examples=60, deadline=None)
@given(matrices(QQ), st.data())
def test_solve_iff_rank_condition(m, data):
    b = tuple(data.draw(st.lists(scalars, min_size=m.nrows, max_size=m.nrows)))
    bcol = Matrix.from_columns(QQ, [b], m.nrows)
    x = m.solve(b)
    if x is None:
        assert hstack(m, bcol).rank() == m.rank() + 1
    else:
        assert hstack(m, bcol).rank() == m.rank()
        assert m.mv(x) == tuple(QQ.of(v) for v in b)


# -- echelon / subspace ----------------------------------------------------

def test_echelon_matches_rref():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    ech = Echelon(QQ, 3)
    ech.extend(rows)
    sub = ech.to_subspace()
    r, rank, _ = mat(rows).rref()
    assert sub.basis == r.rows[:rank]


def test_subspace_coords_roundtrip():
    s = Subspace.from_vectors(QQ, 3, [(1, 2, 0), (0, 0, 1)])
    v = (3, 6, 5)
    c = s.coords(v)
    assert c is not None
    assert s.from_coords(c) == tuple(QQ.of(x) for x in v)
    assert s.coords((1, 0, 0)) is None


def test_subspace_equality_is_canonical():
    a = Subspace.from_vectors(QQ, 2, [(2, 4)])
    b = Subspace.from_vectors(QQ, 2, [(-1, -2)])
    assert a == b
