"""Random operators for property checks.

Unconditioned random rational matrices are almost surely invertible, which
would leave every interesting stratum empty.  These generators target the
strata directly (index <= 1, index >= 2, EP, idempotent, ...) and certify
the result with :attr:`FinitePotentOperator.index` before returning.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .finite_potent import FINITE, FinitePotentOperator
from .matrix import Matrix, assemble
from .scalars import COMPLEX, REAL, Gaussian

ENTRY_RANGE = 3


def make_rng(seed) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def random_scalar(rng: random.Random, field: str = REAL, lo: int = -ENTRY_RANGE, hi: int = ENTRY_RANGE):
    if field == COMPLEX:
        return Gaussian(rng.randint(lo, hi), rng.randint(lo, hi))
    return Fraction(rng.randint(lo, hi))


def random_matrix(rows: int, cols: int, rng: random.Random, field: str = REAL) -> Matrix:
    return Matrix([[random_scalar(rng, field) for _ in range(cols)] for _ in range(rows)], field=field)


def random_full_rank(rows: int, cols: int, rng: random.Random, field: str = REAL) -> Matrix:
    want = min(rows, cols)
    while True:
        M = random_matrix(rows, cols, rng, field)
        if M.rank() == want:
            return M


def random_invertible(n: int, rng: random.Random, field: str = REAL) -> Matrix:
    return random_full_rank(n, n, rng, field)


def _block_diag(a: Matrix, b: Matrix) -> Matrix:
    top = a.hstack(Matrix.zeros(a.rows, b.cols, a.field))
    bottom = Matrix.zeros(b.rows, a.cols, a.field).hstack(b)
    return top.vstack(bottom)


def _conjugate_by(S: Matrix, D: Matrix) -> Matrix:
    return S @ D @ S.inverse()


def random_nilpotent(k: int, rng: random.Random, field: str = REAL, nonzero: bool = True) -> Matrix:
    """Strictly lower-triangular ``k x k`` matrix; nonzero if ``k >= 2`` and requested."""
    while True:
        rows = [[random_scalar(rng, field) if j < i else 0 for j in range(k)] for i in range(k)]
        N = Matrix(rows, field=field)
        if not nonzero or k < 2 or not N.is_zero():
            return N


def random_index_le1(n: int, rng: random.Random, field: str = REAL, rank=None, ambient: str = FINITE) -> FinitePotentOperator:
    """``S diag(G, 0) S^-1`` with ``G`` invertible ``r x r``."""
    r = rng.randint(0, n) if rank is None else rank
    S = random_invertible(n, rng, field)
    G = random_invertible(r, rng, field) if r else Matrix.zeros(0, 0, field)
    D = _block_diag(G, Matrix.zeros(n - r, n - r, field))
    op = FinitePotentOperator(_conjugate_by(S, D), ambient)
    assert op.index <= 1
    return op


def random_high_index(n: int, rng: random.Random, field: str = REAL, ambient: str = FINITE) -> FinitePotentOperator:
    """``S diag(G, N) S^-1`` with ``N`` a nonzero nilpotent, so the index is >= 2."""
    if n < 2:
        raise ValueError("index >= 2 needs dimension >= 2")
    r = rng.randint(0, n - 2)
    S = random_invertible(n, rng, field)
    G = random_invertible(r, rng, field) if r else Matrix.zeros(0, 0, field)
    D = _block_diag(G, random_nilpotent(n - r, rng, field))
    op = FinitePotentOperator(_conjugate_by(S, D), ambient)
    assert op.index >= 2
    return op


def random_any(n: int, rng: random.Random, field: str = REAL, ambient: str = FINITE) -> FinitePotentOperator:
    """Invertible part plus an arbitrary (possibly zero) nilpotent part."""
    r = rng.randint(0, n)
    S = random_invertible(n, rng, field)
    G = random_invertible(r, rng, field) if r else Matrix.zeros(0, 0, field)
    N = random_nilpotent(n - r, rng, field, nonzero=False)
    return FinitePotentOperator(_conjugate_by(S, _block_diag(G, N)), ambient)


def _on_image(n: int, rng: random.Random, field: str, G: Matrix, ambient: str) -> FinitePotentOperator:
    """Operator acting as ``G`` on a random ``r``-dim subspace and killing its complement."""
    r = G.rows
    if r == 0:
        return FinitePotentOperator(Matrix.zeros(n, n, field), ambient)
    X = random_full_rank(n, r, rng, field)
    im = X.columns()
    perp = list(X.H.kernel_basis())
    images = (X @ G).columns() + [(0,) * n] * len(perp)
    return FinitePotentOperator(assemble(im + perp, images, n, field), ambient)


def random_ep(n: int, rng: random.Random, field: str = REAL, rank=None, ambient: str = FINITE) -> FinitePotentOperator:
    """Image orthogonal to kernel."""
    r = rng.randint(0, n) if rank is None else rank
    G = random_invertible(r, rng, field) if r else Matrix.zeros(0, 0, field)
    return _on_image(n, rng, field, G, ambient)


def random_idempotent(n: int, rng: random.Random, field: str = REAL, ambient: str = FINITE) -> FinitePotentOperator:
    r = rng.randint(0, n)
    S = random_invertible(n, rng, field)
    D = Matrix.diag([1] * r + [0] * (n - r), field=field)
    return FinitePotentOperator(_conjugate_by(S, D), ambient)


def random_tripotent_ep(n: int, rng: random.Random, field: str = REAL, ambient: str = FINITE) -> FinitePotentOperator:
    """EP with ``phi^3 = phi``: an involution on the image."""
    r = rng.randint(0, n)
    if r:
        T = random_invertible(r, rng, field)
        signs = Matrix.diag([rng.choice((1, -1)) for _ in range(r)], field=field)
        G = _conjugate_by(T, signs)
    else:
        G = Matrix.zeros(0, 0, field)
    return _on_image(n, rng, field, G, ambient)


def random_unitary(n: int, rng: random.Random, field: str = REAL) -> Matrix:
    """Cayley transform ``(I - A)(I + A)^-1`` of a random skew-adjoint ``A``."""
    M = random_matrix(n, n, rng, field)
    A = M - M.H
    I = Matrix.identity(n, field)
    return (I - A) @ (I + A).inverse()


def random_partial_isometry_ep(n: int, rng: random.Random, field: str = REAL, ambient: str = FINITE) -> FinitePotentOperator:
    """EP with ``phi phi* phi = phi``: ``Q D Q*`` with ``D`` a signed permutation on a coordinate block."""
    r = rng.randint(0, n)
    perm = list(range(r))
    rng.shuffle(perm)
    rows = [[0] * n for _ in range(n)]
    for i, j in enumerate(perm):
        rows[i][j] = rng.choice((1, -1))
    D = Matrix(rows, field=field)
    Q = random_unitary(n, rng, field)
    return FinitePotentOperator(Q @ D @ Q.H, ambient)


def random_perturbation(n: int, rng: random.Random, field: str = REAL) -> Matrix:
    """Nonzero random ``n x n`` matrix."""
    while True:
        E = random_matrix(n, n, rng, field)
        if not E.is_zero():
            return E


STRATA = {
    "index<=1": random_index_le1,
    "ep": random_ep,
    "idempotent": random_idempotent,
    "tripotent-ep": random_tripotent_ep,
    "partial-isometry-ep": random_partial_isometry_ep,
}


def random_index_le1_mixed(n: int, rng: random.Random, field: str = REAL, ambient: str = FINITE) -> FinitePotentOperator:
    """Index <= 1 sample drawn from a mix of strata, weighted toward the generic one."""
    name = rng.choices(list(STRATA), weights=[6, 2, 1, 1, 1])[0]
    return STRATA[name](n, rng, field, ambient=ambient)
