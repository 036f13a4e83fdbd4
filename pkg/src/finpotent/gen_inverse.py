"""Drazin, group, Moore-Penrose and core inverses, plus verification predicates.

Every inverse is built geometrically: pick a basis of the space split along
the relevant direct sum, prescribe where each basis vector goes, and solve
for the matrix (:func:`finpotent.matrix.assemble`).  The algebraic
expressions (``core = group o phi o mp`` and friends) are asserted as
cross-checks rather than used as the construction path.

Countable-ambient operators are handled on their block: each inverse built
here kills the tail and has image inside ``span(e_1..e_m)``, so the padded
computation and the block computation agree.
"""
from __future__ import annotations

import enum
from collections import OrderedDict

from .finite_potent import FinitePotentOperator, ast_decomposition, memoized
from .matrix import assemble


class IndexTooLarge(ValueError):
    """The operator has index >= 2 where index <= 1 is required."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class NoGroupInverse(IndexTooLarge):
    pass


class NoCoreInverse(IndexTooLarge):
    pass


class InverseKind(enum.Enum):
    DRAZIN = "drazin"
    GROUP = "group"
    MOORE_PENROSE = "mp"
    CORE = "core"
    CORE_DAGGER = "core-dagger"
    CORE_OF_MP = "core-of-mp"


class InverseClass(enum.Enum):
    ONE = "one"
    TWO = "two"
    ONE_TWO = "one-two"
    PENROSE = "penrose"
    DRAZIN = "drazin"
    GROUP = "group"
    CORE = "core"


def _zero_vec(op):
    return (0,) * op.n


def _build(op: FinitePotentOperator, basis, images) -> FinitePotentOperator:
    return op.like(assemble(list(basis), list(images), op.n, op.field))


def require_index_le1(op: FinitePotentOperator, what: str, exc=IndexTooLarge):
    i = op.index
    if i > 1:
        raise exc(f"{what} exists iff index ≤ 1 (this operator has index {i})", i)


@memoized
def drazin(op: FinitePotentOperator) -> FinitePotentOperator:
    """Inverse of the operator on ``W``, zero on ``U``."""
    ast = ast_decomposition(op)
    z = _zero_vec(op)
    # phi maps W onto W, so {phi(w)} is again a basis of W; send it back to w.
    basis = [op @ w for w in ast.W] + list(ast.U_block)
    images = list(ast.W) + [z] * ast.U_block.dim
    return _build(op, basis, images)


def group_inverse(op: FinitePotentOperator) -> FinitePotentOperator:
    require_index_le1(op, "group inverse", NoGroupInverse)
    return drazin(op)


@memoized
def moore_penrose(op: FinitePotentOperator) -> FinitePotentOperator:
    """Inverse of ``phi`` from ``Ker^perp`` onto ``Im``, zero on ``Im^perp``."""
    coimage = op.kernel().orth_complement()
    im_perp = op.image().orth_complement()
    z = _zero_vec(op)
    basis = [op @ k for k in coimage] + list(im_perp)
    images = list(coimage) + [z] * im_perp.dim
    return _build(op, basis, images)


@memoized
def core_inverse(op: FinitePotentOperator) -> FinitePotentOperator:
    """Inverse of ``phi`` on ``Im(phi)``, zero on ``Im(phi)^perp``."""
    require_index_le1(op, "core inverse", NoCoreInverse)
    im = op.image()
    im_perp = im.orth_complement()
    z = _zero_vec(op)
    basis = [op @ x for x in im] + list(im_perp)
    images = list(im) + [z] * im_perp.dim
    result = _build(op, basis, images)
    assert result == drazin(op) @ op @ moore_penrose(op), "core inverse: geometric and algebraic forms differ"
    return result


def core_dagger(op: FinitePotentOperator) -> FinitePotentOperator:
    """``phi o P_Im(phi)``: both the core inverse and the MP inverse of the core inverse."""
    require_index_le1(op, "core inverse", NoCoreInverse)
    result = op @ op.like(op.image().projector())
    core = core_inverse(op)
    assert result == moore_penrose(core) == core_inverse(core)
    return result


def core_of_mp(op: FinitePotentOperator) -> FinitePotentOperator:
    """Core inverse of the Moore-Penrose inverse."""
    require_index_le1(op, "core inverse of the MP inverse", NoCoreInverse)
    mp = moore_penrose(op)
    result = core_inverse(mp)
    assert result == group_inverse(mp) @ mp.like(mp.image().projector())
    return result


@memoized
def is_ep(op: FinitePotentOperator) -> bool:
    """``Im(phi) == Im(phi*)``."""
    return op.image() == op.adjoint().image()


_KIND_FUNCS = {
    InverseKind.DRAZIN: drazin,
    InverseKind.GROUP: group_inverse,
    InverseKind.MOORE_PENROSE: moore_penrose,
    InverseKind.CORE: core_inverse,
    InverseKind.CORE_DAGGER: core_dagger,
    InverseKind.CORE_OF_MP: core_of_mp,
}


def inverse(op: FinitePotentOperator, kind) -> FinitePotentOperator:
    return _KIND_FUNCS[InverseKind(kind)](op)


def check_inverse_class(a: FinitePotentOperator, x: FinitePotentOperator, cls) -> "OrderedDict[str, bool]":
    """Evaluate each defining equation of ``cls`` for the candidate ``x``.

    >>> C = FinitePotentOperator.from_rows([[1, 1], [0, 0]])
    >>> X = FinitePotentOperator.from_rows([[1, 0], [0, 0]])
    >>> all(check_inverse_class(C, X, "core").values())
    True
    """
    cls = InverseClass(cls)
    a._same(x)
    ax, xa = a @ x, x @ a
    out = OrderedDict()
    if cls is InverseClass.DRAZIN:
        k = a.index
        out[f"A^{k + 1} X = A^{k}"] = (a ** (k + 1)) @ x == a ** k
        out["XAX = X"] = xa @ x == x
        out["AX = XA"] = ax == xa
        return out
    if cls in (InverseClass.ONE, InverseClass.ONE_TWO, InverseClass.PENROSE, InverseClass.GROUP, InverseClass.CORE):
        out["AXA = A"] = ax @ a == a
    if cls in (InverseClass.TWO, InverseClass.ONE_TWO, InverseClass.PENROSE, InverseClass.GROUP):
        out["XAX = X"] = xa @ x == x
    if cls is InverseClass.PENROSE:
        out["(AX)* = AX"] = ax.adjoint() == ax
        out["(XA)* = XA"] = xa.adjoint() == xa
    if cls is InverseClass.GROUP:
        out["AX = XA"] = ax == xa
    if cls is InverseClass.CORE:
        out["A X^2 = X"] = a @ x @ x == x
        out["(AX)* = AX"] = ax.adjoint() == ax
    return out
