"""Dense exact matrices and subspaces.

Entries are :class:`~fractions.Fraction` (real field) or
:class:`~finpotent.scalars.Gaussian` (complex field).  Matrices are immutable
value objects; every operation returns a new matrix.

The inner product is the standard one, ``g(u, v) = sum(conj(u_i) * v_i)``.
Orthogonal projectors are built from the Gram matrix, never by
orthonormalising, so everything stays inside the ground field.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .scalars import COMPLEX, REAL, FieldMismatch, Gaussian, to_field, zero, one

__all__ = [
    "Matrix",
    "Subspace",
    "NotSquare",
    "SingularMatrix",
    "DependentBasis",
    "ShapeMismatch",
    "rref",
    "kernel_basis",
    "image_basis",
    "conj_transpose",
    "solve",
    "orth_projector",
    "orth_complement",
    "matrix_pow",
    "assemble",
]


class NotSquare(ValueError):
    pass


class SingularMatrix(ValueError):
    pass


class DependentBasis(ValueError):
    pass


class ShapeMismatch(ValueError):
    pass


def _infer_field(rows) -> str:
    for row in rows:
        for x in row:
            if isinstance(x, Gaussian):
                return COMPLEX
    return REAL


def _rref_inplace(m: list, ncols: int, aug: Optional[list] = None):
    """Gauss-Jordan on a list of row lists.  Returns the pivot columns.

    ``aug`` (optional) is a parallel list of rows that receives the same row
    operations; used by :meth:`Matrix.inverse` and :func:`solve`.
    Zero entries are skipped, which keeps sparse inputs cheap.
    """
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            if aug is not None:
                aug[r], aug[p] = aug[p], aug[r]
        row = m[r]
        piv = row[c]
        if piv != 1:
            inv = 1 / piv
            row = m[r] = [x * inv if x else x for x in row]
            if aug is not None:
                aug[r] = [x * inv if x else x for x in aug[r]]
        support = [j for j in range(c, ncols) if row[j]]
        aug_support = None
        if aug is not None:
            arow = aug[r]
            aug_support = [j for j in range(len(arow)) if arow[j]]
        for i in range(nrows):
            if i == r:
                continue
            f = m[i][c]
            if not f:
                continue
            target = m[i]
            for j in support:
                target[j] = target[j] - f * row[j]
            if aug_support is not None:
                atarget = aug[i]
                arow = aug[r]
                for j in aug_support:
                    atarget[j] = atarget[j] - f * arow[j]
        pivots.append(c)
        r += 1
    return pivots


_ZERO = Fraction(0)


def _scaled(vec):
    """``(ints, d)`` with ``vec == ints / d`` for a vector of Fractions."""
    d = 1
    for x in vec:
        q = x.denominator
        if q != 1:
            d = d * q // math.gcd(d, q)
    return [x.numerator * (d // x.denominator) for x in vec], d


def _rational_matmul(a_rows, b_rows, ncols):
    # Integer dot products over per-row/per-column common denominators: one
    # Fraction normalisation per entry instead of one per multiply-add.
    rows = [_scaled(r) for r in a_rows]
    cols = [_scaled([r[j] for r in b_rows]) for j in range(ncols)]
    cols = [([(i, x) for i, x in enumerate(ints) if x], d) for ints, d in cols]
    out = []
    for ints, dr in rows:
        line = []
        for support, dc in cols:
            acc = 0
            for i, x in support:
                y = ints[i]
                if y:
                    acc += y * x
            line.append(Fraction(acc, dr * dc) if acc else _ZERO)
        out.append(line)
    return out


def _gaussian_matmul(a_rows, b_rows, ncols):
    """Same scheme as the rational case, carrying real and imaginary parts."""

    def split(vec):
        vec = [Gaussian.coerce(x) for x in vec]
        ints, d = _scaled([x.re for x in vec] + [x.im for x in vec])
        k = len(vec)
        return ints[:k], ints[k:], d

    rows = [split(r) for r in a_rows]
    cols = []
    for j in range(ncols):
        re, im, d = split([r[j] for r in b_rows])
        cols.append(([(i, x, y) for i, (x, y) in enumerate(zip(re, im)) if x or y], d))
    zero_g = Gaussian(0, 0)
    out = []
    for are, aim, dr in rows:
        line = []
        for support, dc in cols:
            acc_re = acc_im = 0
            for i, x, y in support:
                p, q = are[i], aim[i]
                if p or q:
                    acc_re += p * x - q * y
                    acc_im += p * y + q * x
            if acc_re or acc_im:
                den = dr * dc
                line.append(Gaussian(Fraction(acc_re, den), Fraction(acc_im, den)))
            else:
                line.append(zero_g)
        out.append(line)
    return out


class Matrix:
    """Immutable ``rows x cols`` matrix over Q or Q(i).

    >>> M = Matrix([[1, 1], [1, 1]])
    >>> M.rank()
    1
    >>> M @ M == 2 * M
    True
    """

    __slots__ = ("rows", "cols", "field", "_data")

    def __init__(self, entries: Sequence[Sequence], field: Optional[str] = None, cols: Optional[int] = None):
        entries = [list(r) for r in entries]
        if field is None:
            field = _infer_field(entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        for r in entries:
            if len(r) != cols:
                raise ShapeMismatch("ragged rows")
        _set = object.__setattr__
        _set(self, "rows", len(entries))
        _set(self, "cols", cols)
        _set(self, "field", field)
        _set(self, "_data", tuple(tuple(to_field(x, field) for x in r) for r in entries))

    @classmethod
    def _raw(cls, data, rows: int, cols: int, field: str) -> "Matrix":
        obj = cls.__new__(cls)
        _set = object.__setattr__
        _set(obj, "rows", rows)
        _set(obj, "cols", cols)
        _set(obj, "field", field)
        _set(obj, "_data", tuple(tuple(r) for r in data))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors --------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None, field: str = REAL) -> "Matrix":
        cols = rows if cols is None else cols
        z = zero(field)
        return cls._raw([[z] * cols for _ in range(rows)], rows, cols, field)

    @classmethod
    def identity(cls, n: int, field: str = REAL) -> "Matrix":
        z, o = zero(field), one(field)
        return cls._raw([[o if i == j else z for j in range(n)] for i in range(n)], n, n, field)

    @classmethod
    def diag(cls, entries: Sequence, field: Optional[str] = None) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], field=field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int, field: str = REAL) -> "Matrix":
        data = [[to_field(col[i], field) for col in columns] for i in range(nrows)]
        return cls._raw(data, nrows, len(columns), field)

    # -- access --------------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def columns(self) -> list:
        return [self.col(j) for j in range(self.cols)]

    def tolist(self) -> list:
        return [list(r) for r in self._data]

    def is_zero(self) -> bool:
        return not any(x for r in self._data for x in r)

    # -- algebra -------------------------------------------------------
    def _check(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field} matrix")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        data = [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)]
        return Matrix._raw(data, self.rows, self.cols, self.field)

    def __neg__(self) -> "Matrix":
        return Matrix._raw([[-a for a in r] for r in self._data], self.rows, self.cols, self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            return NotImplemented
        c = to_field(c, self.field)
        return Matrix._raw([[c * a for a in r] for r in self._data], self.rows, self.cols, self.field)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            if self.cols != other.rows:
                raise ShapeMismatch(f"{self.shape} @ {other.shape}")
            if self.field == REAL:
                return Matrix._raw(_rational_matmul(self._data, other._data, other.cols), self.rows, other.cols, REAL)
            return Matrix._raw(_gaussian_matmul(self._data, other._data, other.cols), self.rows, other.cols, COMPLEX)
        v = tuple(other)
        if len(v) != self.cols:
            raise ShapeMismatch(f"{self.shape} @ vector of length {len(v)}")
        z = zero(self.field)
        nz = [(j, b) for j, b in enumerate(v) if b]
        res = []
        for r in self._data:
            acc = z
            for j, b in nz:
                a = r[j]
                if a:
                    acc = acc + a * b
            res.append(acc)
        return tuple(res)

    def __pow__(self, n: int) -> "Matrix":
        return matrix_pow(self, n)

    @property
    def H(self) -> "Matrix":
        """Conjugate transpose."""
        data = [[self._data[i][j].conjugate() for i in range(self.rows)] for j in range(self.cols)]
        return Matrix._raw(data, self.cols, self.rows, self.field)

    @property
    def T(self) -> "Matrix":
        data = [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return Matrix._raw(data, self.cols, self.rows, self.field)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.rows != other.rows:
            raise ShapeMismatch("hstack needs equal row counts")
        return Matrix._raw([r + s for r, s in zip(self._data, other._data)], self.rows, self.cols + other.cols, self.field)

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.cols:
            raise ShapeMismatch("vstack needs equal column counts")
        return Matrix._raw(self._data + other._data, self.rows + other.rows, self.cols, self.field)

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "Matrix":
        rows, cols = list(rows), list(cols)
        return Matrix._raw([[self._data[i][j] for j in cols] for i in rows], len(rows), len(cols), self.field)

    # -- elimination ---------------------------------------------------
    def rref(self):
        m = [list(r) for r in self._data]
        pivots = _rref_inplace(m, self.cols)
        return Matrix._raw(m, self.rows, self.cols, self.field), len(pivots), pivots

    def rank(self) -> int:
        m = [list(r) for r in self._data]
        return len(_rref_inplace(m, self.cols))

    def kernel_basis(self) -> "Subspace":
        R, rank, pivots = self.rref()
        pivset = set(pivots)
        z, o = zero(self.field), one(self.field)
        vectors = []
        for f in range(self.cols):
            if f in pivset:
                continue
            v = [z] * self.cols
            v[f] = o
            for i, p in enumerate(pivots):
                v[p] = -R[i, f]
            vectors.append(tuple(v))
        return Subspace(self.cols, vectors, self.field, _trusted=True)

    def image_basis(self) -> "Subspace":
        _, _, pivots = self.rref()
        return Subspace(self.rows, [self.col(p) for p in pivots], self.field, _trusted=True)

    def solve(self, b: Sequence) -> Optional[tuple]:
        """One solution of ``self @ x == b`` (free variables zero), or ``None``."""
        if len(b) != self.rows:
            raise ShapeMismatch(f"rhs of length {len(b)} for {self.rows} rows")
        m = [list(r) for r in self._data]
        aug = [[to_field(x, self.field)] for x in b]
        pivots = _rref_inplace(m, self.cols, aug)
        rank = len(pivots)
        if any(aug[i][0] for i in range(rank, self.rows)):
            return None
        x = [zero(self.field)] * self.cols
        for i, p in enumerate(pivots):
            x[p] = aug[i][0]
        return tuple(x)

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise NotSquare(f"cannot invert a {self.rows}x{self.cols} matrix")
        n = self.rows
        m = [list(r) for r in self._data]
        aug = [list(r) for r in Matrix.identity(n, self.field)._data]
        pivots = _rref_inplace(m, n, aug)
        if len(pivots) < n:
            raise SingularMatrix("matrix is singular")
        return Matrix._raw(aug, n, n, self.field)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"Matrix([{body}])"

    def __str__(self):
        cells = [[str(x) for x in r] for r in self._data]
        if not cells:
            return "[]"
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)


class Subspace:
    """Span of linearly independent vectors in ``field^ambient_dim``.

    Comparison operators are subspace relations, decided by rank tests:
    ``S <= T`` is inclusion and ``S == T`` is equality of spans.
    """

    __slots__ = ("ambient_dim", "vectors", "field")
    __hash__ = None

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence], field: str = REAL, _trusted: bool = False):
        self.ambient_dim = ambient_dim
        self.field = field
        self.vectors = tuple(tuple(to_field(x, field) for x in v) for v in vectors)
        if not _trusted:
            for v in self.vectors:
                if len(v) != ambient_dim:
                    raise ShapeMismatch(f"vector of length {len(v)} in dimension {ambient_dim}")
            if self.vectors and self.matrix().rank() != len(self.vectors):
                raise DependentBasis("vectors are linearly dependent")

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence], field: str = REAL) -> "Subspace":
        """Span of arbitrary (possibly dependent) vectors."""
        vectors = [tuple(v) for v in vectors]
        if not vectors:
            return cls(ambient_dim, [], field, _trusted=True)
        return Matrix.from_columns(vectors, ambient_dim, field).image_basis()

    @classmethod
    def full(cls, n: int, field: str = REAL) -> "Subspace":
        return cls(n, Matrix.identity(n, field).columns(), field, _trusted=True)

    @classmethod
    def zero(cls, n: int, field: str = REAL) -> "Subspace":
        return cls(n, [], field, _trusted=True)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def matrix(self) -> Matrix:
        """Basis vectors as the columns of an ``ambient_dim x dim`` matrix."""
        return Matrix.from_columns(self.vectors, self.ambient_dim, self.field)

    def contains(self, v: Sequence) -> bool:
        if not self.vectors:
            return not any(v)
        return self.matrix().solve(v) is not None

    def __contains__(self, v):
        return self.contains(v)

    def __le__(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise ShapeMismatch("subspaces of different ambient spaces")
        if not self.vectors:
            return True
        if self.dim > other.dim:
            return False
        if not other.vectors:
            return False
        return other.matrix().hstack(self.matrix()).rank() == other.dim

    def __ge__(self, other: "Subspace") -> bool:
        return other <= self

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.dim == other.dim and self <= other

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.ambient_dim, self.vectors + other.vectors, self.field)

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection."""
        if not self.vectors or not other.vectors:
            return Subspace.zero(self.ambient_dim, self.field)
        A, B = self.matrix(), other.matrix()
        coeffs = A.hstack(-B).kernel_basis()
        return Subspace.span(self.ambient_dim, [A @ c[: self.dim] for c in coeffs], self.field)

    def orth_complement(self) -> "Subspace":
        if not self.vectors:
            return Subspace.full(self.ambient_dim, self.field)
        return self.matrix().H.kernel_basis()

    def projector(self) -> Matrix:
        """Orthogonal projector ``B (B* B)^{-1} B*`` onto the span."""
        n = self.ambient_dim
        if not self.vectors:
            return Matrix.zeros(n, n, self.field)
        B = self.matrix()
        gram = B.H @ B
        try:
            gram_inv = gram.inverse()
        except SingularMatrix:
            raise DependentBasis("Gram matrix is singular") from None
        return B @ gram_inv @ B.H

    def is_orthogonal_to(self, other: "Subspace") -> bool:
        return all(
            not sum((a.conjugate() * b for a, b in zip(u, v)), zero(self.field))
            for u in self.vectors
            for v in other.vectors
        )

    def __repr__(self):
        vecs = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vectors)
        return f"span{{{vecs}}}"


# -- functional surface ------------------------------------------------------

def rref(M: Matrix):
    """``(R, rank, pivots)`` with ``R`` the reduced row-echelon form."""
    return M.rref()


def kernel_basis(M: Matrix) -> Subspace:
    return M.kernel_basis()


def image_basis(M: Matrix) -> Subspace:
    return M.image_basis()


def conj_transpose(M: Matrix) -> Matrix:
    return M.H


def solve(M: Matrix, b: Sequence) -> Optional[tuple]:
    return M.solve(b)


def orth_projector(B: Subspace) -> Matrix:
    return B.projector()


def orth_complement(B: Subspace) -> Subspace:
    return B.orth_complement()


def matrix_pow(M: Matrix, n: int) -> Matrix:
    if not M.is_square:
        raise NotSquare(f"cannot raise a {M.rows}x{M.cols} matrix to a power")
    if n < 0:
        raise ValueError("negative exponent")
    result = Matrix.identity(M.rows, M.field)
    base = M
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


def assemble(basis: Sequence[Sequence], images: Sequence[Sequence], n: int, field: str = REAL) -> Matrix:
    """The matrix sending ``basis[k]`` to ``images[k]``.

    ``basis`` must be a basis of the whole space; the result is
    ``Images @ Basis^{-1}`` with coordinates as columns.
    """
    if len(basis) != n or len(images) != n:
        raise DependentBasis(f"need {n} basis vectors, got {len(basis)}")
    Bm = Matrix.from_columns(basis, n, field)
    Im = Matrix.from_columns(images, n, field)
    try:
        return Im @ Bm.inverse()
    except SingularMatrix:
        raise DependentBasis("prescribed vectors do not form a basis") from None
