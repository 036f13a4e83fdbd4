from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finpotent.matrix import (
    DependentBasis,
    Matrix,
    NotSquare,
    ShapeMismatch,
    SingularMatrix,
    Subspace,
    assemble,
    conj_transpose,
    image_basis,
    kernel_basis,
    matrix_pow,
    orth_complement,
    orth_projector,
    rref,
    solve,
)
from finpotent.scalars import COMPLEX, FieldMismatch, Gaussian, I

A_ROWS = [[29, 0, 0, 0, 0], [0, 33, 0, 0, 0], [0, 0, 0, 0, 0], [0, 0, 0, 0, 0], [0, 0, 0, 1, 0]]

small = st.integers(-3, 3)


@st.composite
def matrices(draw, rows=None, cols=None, complex_=False):
    r = draw(st.integers(1, 4)) if rows is None else rows
    c = draw(st.integers(1, 4)) if cols is None else cols
    if complex_:
        entry = st.builds(Gaussian, small, small)
        return Matrix([[draw(entry) for _ in range(c)] for _ in range(r)], field=COMPLEX)
    return Matrix([[draw(small) for _ in range(c)] for _ in range(r)])


def naive_matmul(a, b):
    return Matrix(
        [[sum((a[i, k] * b[k, j] for k in range(a.cols)), a[0, 0] * 0) for j in range(b.cols)] for i in range(a.rows)],
        field=a.field,
    )


def e(n, k):
    return tuple(1 if i == k else 0 for i in range(n))


# -- rref ----------------------------------------------------------------------

def test_rref_identity():
    R, rank, piv = rref(Matrix.identity(3))
    assert R == Matrix.identity(3) and rank == 3 and piv == [0, 1, 2]


def test_rref_duplicate_rows():
    R, rank, piv = rref(Matrix([[1, 1], [1, 1]]))
    assert R == Matrix([[1, 1], [0, 0]]) and rank == 1 and piv == [0]


def test_rref_rank_of_index_two_matrix():
    assert Matrix(A_ROWS).rank() == 3


@given(matrices())
def test_rref_idempotent_and_rank_nullity(M):
    R, rank, piv = M.rref()
    assert R.rref()[0] == R
    assert len(piv) == rank
    assert M.kernel_basis().dim + rank == M.cols
    assert M.image_basis().dim == rank == M.H.rank()


# -- kernel / image --------------------------------------------------------------

def test_kernel_examples():
    assert kernel_basis(Matrix.identity(3)).dim == 0
    assert kernel_basis(Matrix([[1, 1], [0, 0]])) == Subspace(2, [(1, -1)])
    assert kernel_basis(Matrix.zeros(2, 2)).dim == 2


def test_image_examples():
    assert image_basis(Matrix.zeros(2, 2)).dim == 0
    assert image_basis(Matrix(A_ROWS)) == Subspace(5, [e(5, 0), e(5, 1), e(5, 4)])
    assert image_basis(Matrix([[1, 1], [1, 1]])) == Subspace(2, [(1, 1)])


@given(matrices())
def test_kernel_vectors_are_killed(M):
    for v in M.kernel_basis():
        assert all(x == 0 for x in M @ v)


@given(matrices(complex_=True))
@settings(max_examples=40)
def test_complex_kernel_and_image(M):
    assert M.kernel_basis().dim + M.rank() == M.cols
    for v in M.kernel_basis():
        assert not any(M @ v)


# -- conjugate transpose ------------------------------------------------------------

def test_conj_transpose_examples():
    S = Matrix([[1, 2], [2, 5]])
    assert conj_transpose(S) == S
    assert conj_transpose(Matrix([[I]])) == Matrix([[-I]])


@given(matrices(complex_=True))
@settings(max_examples=40)
def test_conj_transpose_involution(M):
    assert M.H.H == M
    assert M.H.shape == (M.cols, M.rows)


# -- multiplication ------------------------------------------------------------------

@given(st.data())
def test_matmul_matches_naive(data):
    n, k, m = (data.draw(st.integers(1, 4)) for _ in range(3))
    cx = data.draw(st.booleans())
    a = data.draw(matrices(n, k, complex_=cx))
    b = data.draw(matrices(k, m, complex_=cx))
    assert a @ b == naive_matmul(a, b)


def test_matmul_with_fractions():
    a = Matrix([[F(1, 2), F(1, 3)], [0, F(-2, 7)]])
    b = Matrix([[F(3, 5), 1], [F(1, 4), F(7, 2)]])
    assert a @ b == naive_matmul(a, b)
    assert a @ b == Matrix([[F(3, 10) + F(1, 12), F(1, 2) + F(7, 6)], [F(-1, 14), -1]])


def test_matvec():
    assert Matrix([[2, 0], [1, 1]]) @ (1, 3) == (2, 4)


def test_shape_and_field_errors():
    with pytest.raises(ShapeMismatch):
        Matrix.identity(2) @ Matrix.identity(3)
    with pytest.raises(ShapeMismatch):
        Matrix([[1, 2], [3]])
    with pytest.raises(FieldMismatch):
        Matrix.identity(2) + Matrix.identity(2, COMPLEX)


# -- solve / inverse ---------------------------------------------------------------

def test_solve_examples():
    assert solve(Matrix.identity(3), (1, 2, 3)) == (1, 2, 3)
    assert solve(Matrix([[1, 1], [0, 0]]), (0, 1)) is None
    assert solve(Matrix([[2, 0], [0, 4]]), (1, 1)) == (F(1, 2), F(1, 4))


@given(matrices(3, 3), st.lists(small, min_size=3, max_size=3))
def test_solve_is_consistent(M, b):
    x = M.solve(b)
    if x is None:
        assert M.hstack(Matrix.from_columns([b], 3, M.field)).rank() > M.rank()
    else:
        assert M @ x == tuple(F(v) for v in b)


@given(matrices(3, 3, complex_=True))
@settings(max_examples=40)
def test_inverse(M):
    if M.rank() < 3:
        with pytest.raises(SingularMatrix):
            M.inverse()
    else:
        assert M @ M.inverse() == Matrix.identity(3, COMPLEX)


def test_inverse_needs_square():
    with pytest.raises(NotSquare):
        Matrix([[1, 2]]).inverse()


# -- projectors and complements ------------------------------------------------------

def test_projector_examples():
    assert orth_projector(Subspace(2, [e(2, 0)])) == Matrix([[1, 0], [0, 0]])
    half = F(1, 2)
    assert orth_projector(Subspace(2, [(1, 1)])) == Matrix([[half, half], [half, half]])
    assert orth_projector(Subspace.full(3)) == Matrix.identity(3)


def test_complement_examples():
    assert orth_complement(Subspace(3, [e(3, 0)])) == Subspace(3, [e(3, 1), e(3, 2)])
    assert orth_complement(Subspace.zero(3)) == Subspace.full(3)
    assert orth_complement(Subspace(2, [(1, 1)])) == Subspace(2, [(1, -1)])


@given(matrices(4, 2, complex_=True))
@settings(max_examples=40)
def test_projector_properties(M):
    S = M.image_basis()
    P = S.projector()
    assert P @ P == P
    assert P.H == P
    assert P.image_basis() == S
    C = S.orth_complement()
    assert S.dim + C.dim == 4
    assert S.is_orthogonal_to(C)
    assert (S & C).dim == 0


# -- subspaces ----------------------------------------------------------------------

def test_dependent_basis_rejected():
    with pytest.raises(DependentBasis):
        Subspace(2, [(1, 1), (2, 2)])
    assert Subspace.span(2, [(1, 1), (2, 2)]).dim == 1


@given(matrices(4, 2), matrices(4, 2))
def test_sum_and_intersection_dimensions(M, N):
    S, T = M.image_basis(), N.image_basis()
    assert (S + T).dim + (S & T).dim == S.dim + T.dim
    assert S & T <= S and S & T <= T
    assert S <= S + T and T <= S + T


def test_membership():
    S = Subspace(3, [(1, 1, 0)])
    assert (2, 2, 0) in S
    assert (1, 0, 0) not in S


# -- powers ---------------------------------------------------------------------------

def test_matrix_pow_examples():
    M = Matrix([[1, 2], [3, 4]])
    assert matrix_pow(M, 0) == Matrix.identity(2)
    J = Matrix([[0, 1], [0, 0]])
    assert matrix_pow(J, 2).is_zero()
    assert matrix_pow(Matrix(A_ROWS), 2) == Matrix.diag([29 ** 2, 33 ** 2, 0, 0, 0])


@given(matrices(3, 3), st.integers(0, 5))
def test_pow_matches_repeated_product(M, k):
    P = Matrix.identity(3)
    for _ in range(k):
        P = P @ M
    assert M ** k == P


def test_pow_errors():
    with pytest.raises(NotSquare):
        matrix_pow(Matrix([[1, 2]]), 2)
    with pytest.raises(ValueError):
        matrix_pow(Matrix.identity(2), -1)


# -- assemble --------------------------------------------------------------------------

def test_assemble_recovers_matrix():
    M = Matrix([[1, 2], [3, 4]])
    basis = [(1, 1), (1, -1)]
    assert assemble(basis, [M @ b for b in basis], 2, M.field) == M


def test_assemble_needs_basis():
    with pytest.raises(DependentBasis):
        assemble([(1, 1), (2, 2)], [(0, 0), (0, 0)], 2, "real")


def test_immutable():
    M = Matrix.identity(2)
    with pytest.raises(AttributeError):
        M.rows = 3
    rows = M.tolist()
    rows[0][0] = 5
    assert M[0, 0] == 1
