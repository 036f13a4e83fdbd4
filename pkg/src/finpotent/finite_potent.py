"""Finite potent operators: index, AST splitting, CN splitting.

An operator is a square block of size ``m`` plus an ambient descriptor:

* ``FINITE``: the space is exactly ``k^m``.
* ``COUNTABLE``: the space has basis ``e_1, e_2, ...``; the block says where
  ``e_1..e_m`` go and every ``e_j`` with ``j > m`` is sent to zero.  Such an
  operator has finite rank, so it is finite potent.

For the countable case the tail ``span(e_j : j > m)`` lies in the kernel, is
orthogonal to ``span(e_1..e_m)`` and misses the image.  One extra zero
coordinate (:func:`pad`) is therefore a faithful stand-in for the whole tail.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .matrix import Matrix, NotSquare, Subspace, assemble

FINITE = "finite"
COUNTABLE = "countable"


def memoized(fn):
    """Cache a derived value on the operator instance (operators are immutable)."""
    key = "_memo_" + fn.__name__

    @functools.wraps(fn)
    def wrapper(op):
        d = op.__dict__
        if key not in d:
            d[key] = fn(op)
        return d[key]

    return wrapper


class AmbientMismatch(ValueError):
    """Operators act on different spaces."""


@dataclass(frozen=True, eq=False)
class FinitePotentOperator:
    block: Matrix
    ambient: str = FINITE

    def __post_init__(self):
        if not self.block.is_square:
            raise NotSquare(f"operator block must be square, got {self.block.shape}")
        if self.ambient not in (FINITE, COUNTABLE):
            raise ValueError(f"unknown ambient {self.ambient!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ambient: str = FINITE, field=None) -> "FinitePotentOperator":
        return cls(Matrix(rows, field=field), ambient)

    @property
    def n(self) -> int:
        """Size of the block (the support window for countable operators)."""
        return self.block.rows

    @property
    def field(self) -> str:
        return self.block.field

    @property
    def countable(self) -> bool:
        return self.ambient == COUNTABLE

    def like(self, block: Matrix) -> "FinitePotentOperator":
        """Same ambient, different block."""
        return FinitePotentOperator(block, self.ambient)

    def _same(self, other: "FinitePotentOperator"):
        if not isinstance(other, FinitePotentOperator):
            raise TypeError(f"expected FinitePotentOperator, got {type(other).__name__}")
        if self.ambient != other.ambient or self.n != other.n:
            raise AmbientMismatch(f"{self.ambient}({self.n}) vs {other.ambient}({other.n})")

    def __eq__(self, other):
        if not isinstance(other, FinitePotentOperator):
            return NotImplemented
        return self.ambient == other.ambient and self.block == other.block

    def __hash__(self):
        return hash((self.ambient, self.block))

    def __add__(self, other):
        self._same(other)
        return self.like(self.block + other.block)

    def __sub__(self, other):
        self._same(other)
        return self.like(self.block - other.block)

    def __neg__(self):
        return self.like(-self.block)

    def __mul__(self, c):
        return self.like(self.block * c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, FinitePotentOperator):
            self._same(other)
            return self.like(self.block @ other.block)
        return self.block @ other

    def __pow__(self, k: int):
        return self.like(self.block ** k)

    def adjoint(self) -> "FinitePotentOperator":
        return self.like(self.block.H)

    @property
    def H(self) -> "FinitePotentOperator":
        return self.adjoint()

    def is_zero(self) -> bool:
        return self.block.is_zero()

    def zero(self) -> "FinitePotentOperator":
        return self.like(Matrix.zeros(self.n, self.n, self.field))

    def identity_on_block(self) -> "FinitePotentOperator":
        """Identity on ``e_1..e_m`` (the full identity only for FINITE)."""
        return self.like(Matrix.identity(self.n, self.field))

    # Subspaces are reported in block coordinates; for countable operators
    # the tail is implicitly part of the kernel.
    @memoized
    def image(self) -> Subspace:
        return self.block.image_basis()

    @memoized
    def kernel(self) -> Subspace:
        return self.block.kernel_basis()

    def apply_to(self, S: Subspace) -> Subspace:
        """Image of a subspace under the operator."""
        return Subspace.span(self.n, [self.block @ v for v in S], self.field)

    def restrict_equal(self, other: "FinitePotentOperator", S: Subspace) -> bool:
        """Whether the two operators agree on every vector of ``S``."""
        return all(self.block @ v == other.block @ v for v in S)

    @cached_property
    def index(self) -> int:
        return _index(self)

    def __repr__(self):
        return f"FinitePotentOperator({self.block!r}, ambient={self.ambient!r})"


@dataclass(frozen=True)
class ASTDecomposition:
    """``V = W + U`` with the operator invertible on ``W`` and nilpotent on ``U``.

    ``U_block`` lives in block coordinates; when ``tail_in_U`` is set the
    whole tail ``span(e_j : j > m)`` belongs to ``U`` as well.
    """

    index: int
    W: Subspace
    U_block: Subspace
    tail_in_U: bool


@dataclass(frozen=True)
class CNDecomposition:
    phi1: FinitePotentOperator
    phi2: FinitePotentOperator

    def __iter__(self):
        return iter((self.phi1, self.phi2))


def pad(op: FinitePotentOperator) -> Matrix:
    if not op.countable:
        return op.block
    n = op.n
    z = Matrix.zeros(1, n, op.field)
    col = Matrix.zeros(n + 1, 1, op.field)
    return op.block.vstack(z).hstack(col)


def rank_profile(op: FinitePotentOperator, upto: int) -> list:
    """``[rank(P^0), ..., rank(P^upto)]`` for ``P = pad(op)``."""
    P = pad(op)
    ranks = [P.rows]
    power = Matrix.identity(P.rows, P.field)
    for _ in range(upto):
        power = power @ P
        ranks.append(power.rank())
    return ranks


def _index(op: FinitePotentOperator) -> int:
    P = pad(op)
    prev = P.rows
    power = P
    i = 0
    while True:
        r = power.rank()
        if r == prev:
            return i
        prev = r
        power = power @ P
        i += 1


def index(op: FinitePotentOperator) -> int:
    """Smallest ``i`` with ``rank(P^i) == rank(P^(i+1))``, ``P = pad(op)``."""
    return op.index


@memoized
def ast_decomposition(op: FinitePotentOperator) -> ASTDecomposition:
    i = op.index
    power = op.block ** max(i, 1)
    return ASTDecomposition(
        index=i,
        W=power.image_basis(),
        U_block=power.kernel_basis(),
        tail_in_U=op.countable,
    )


@memoized
def cn_decomposition(op: FinitePotentOperator) -> CNDecomposition:
    """Split ``op`` into its core part (index <= 1) and nilpotent part."""
    ast = ast_decomposition(op)
    n, field = op.n, op.field
    z = (0,) * n
    basis = list(ast.W) + list(ast.U_block)
    on_w = [op.block @ w for w in ast.W]
    on_u = [op.block @ u for u in ast.U_block]
    phi1 = assemble(basis, on_w + [z] * len(on_u), n, field)
    phi2 = assemble(basis, [z] * len(on_w) + on_u, n, field)
    return CNDecomposition(op.like(phi1), op.like(phi2))


def core_part(op: FinitePotentOperator) -> FinitePotentOperator:
    phi1 = cn_decomposition(op).phi1
    # hand back the original instance when equal, so its cached inverses are reused
    return op if phi1 == op else phi1

