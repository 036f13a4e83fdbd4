import doctest
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import finpotent.gen_inverse
import finpotent.matrix
import finpotent.scalars
from finpotent.finite_potent import COUNTABLE, FINITE, FinitePotentOperator, pad
from finpotent.gen_inverse import (
    IndexTooLarge,
    NoCoreInverse,
    NoGroupInverse,
    check_inverse_class,
    core_dagger,
    core_inverse,
    core_of_mp,
    drazin,
    group_inverse,
    inverse,
    is_ep,
    moore_penrose,
)
from finpotent.generators import make_rng, random_any, random_index_le1_mixed
from finpotent.matrix import Matrix
from finpotent.orders import shared_core_pair
from finpotent.scalars import COMPLEX

A, B = shared_core_pair()
C = FinitePotentOperator.from_rows([[1, 1], [0, 0]])
JORDAN3 = FinitePotentOperator.from_rows([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
seeds = st.integers(0, 10**6)


def op(rows, ambient=FINITE):
    return FinitePotentOperator.from_rows(rows, ambient)


def ident(n):
    return FinitePotentOperator(Matrix.identity(n))


def zero(n):
    return FinitePotentOperator(Matrix.zeros(n, n))


@pytest.mark.parametrize("module", [finpotent.gen_inverse, finpotent.matrix, finpotent.scalars])
def test_doctests(module):
    assert doctest.testmod(module).failed == 0


# -- drazin / group ----------------------------------------------------------------

def test_drazin_examples():
    assert drazin(JORDAN3).is_zero()
    assert drazin(ident(3)) == ident(3)
    assert drazin(A) == FinitePotentOperator(Matrix.diag([F(1, 29), F(1, 33), 0, 0, 0]))
    assert all(check_inverse_class(A, drazin(A), "drazin").values())


def test_group_examples():
    with pytest.raises(NoGroupInverse) as info:
        group_inverse(A)
    assert info.value.index == 2
    assert group_inverse(op([[29, 0], [0, 33]])) == op([[F(1, 29), 0], [0, F(1, 33)]])
    assert group_inverse(C) == C
    assert all(check_inverse_class(C, C, "group").values())


# -- moore-penrose ---------------------------------------------------------------------

def test_mp_examples():
    q = F(1, 4)
    assert moore_penrose(op([[1, 1], [1, 1]])) == op([[q, q], [q, q]])
    assert moore_penrose(ident(3)) == ident(3)
    assert moore_penrose(C) == op([[F(1, 2), 0], [F(1, 2), 0]])


def test_mp_of_index_three_operator():
    assert all(check_inverse_class(B, moore_penrose(B), "penrose").values())


@given(seeds, st.sampled_from(["real", COMPLEX]))
@settings(max_examples=25, deadline=None)
def test_penrose_conditions_any_index(seed, field):
    phi = random_any(4, make_rng(seed), field)
    assert all(check_inverse_class(phi, moore_penrose(phi), "penrose").values())
    assert all(check_inverse_class(phi, drazin(phi), "drazin").values())


# -- core --------------------------------------------------------------------------------

def test_core_examples():
    assert core_inverse(C) == op([[1, 0], [0, 0]])
    assert core_inverse(zero(3)).is_zero()
    with pytest.raises(NoCoreInverse) as info:
        core_inverse(A)
    assert "index ≤ 1" in str(info.value) and "index 2" in str(info.value)


def test_core_three_conditions_on_c():
    report = check_inverse_class(C, op([[1, 0], [0, 0]]), "core")
    assert list(report) == ["AXA = A", "A X^2 = X", "(AX)* = AX"]
    assert all(report.values())


def test_core_is_not_mp_for_non_ep():
    assert all(check_inverse_class(C, moore_penrose(C), "penrose").values())
    report = check_inverse_class(C, core_inverse(C), "penrose")
    assert report["(XA)* = XA"] is False
    assert [k for k, v in report.items() if not v] == ["(XA)* = XA"]


def test_core_dagger_examples():
    assert core_dagger(ident(2)) == ident(2)
    assert core_dagger(C) == op([[1, 0], [0, 0]])
    assert core_dagger(C) == moore_penrose(core_inverse(C))
    assert core_dagger(op([[2, 0], [0, 0]])) == op([[2, 0], [0, 0]])


def test_core_of_mp_examples():
    assert core_of_mp(ident(2)) == ident(2)
    assert core_of_mp(op([[2, 0], [0, 0]])) == op([[2, 0], [0, 0]])
    # C^+ = [[1/2,0],[1/2,0]] maps (1,1) to (1/2,1/2) and kills (1,-1)
    assert core_of_mp(C) == op([[1, 1], [1, 1]])


def test_is_ep_examples():
    assert is_ep(op([[1, 2], [2, 5]]))
    assert not is_ep(C)
    assert is_ep(zero(2))


@given(seeds, st.sampled_from(["real", COMPLEX]))
@settings(max_examples=25, deadline=None)
def test_core_geometric_equals_algebraic(seed, field):
    phi = random_index_le1_mixed(4, make_rng(seed), field)
    c = core_inverse(phi)
    assert c == group_inverse(phi) @ phi @ moore_penrose(phi)
    assert all(check_inverse_class(phi, c, "core").values())
    assert phi @ c == phi.like(phi.image().projector())


@given(seeds)
@settings(max_examples=20, deadline=None)
def test_countable_inverses_match_padded(seed):
    phi = random_any(3, make_rng(seed), ambient=COUNTABLE)
    big = FinitePotentOperator(pad(phi))
    assert FinitePotentOperator(pad(drazin(phi))) == drazin(big)
    assert FinitePotentOperator(pad(moore_penrose(phi))) == moore_penrose(big)
    if phi.index <= 1:
        assert FinitePotentOperator(pad(core_inverse(phi))) == core_inverse(big)


def test_inverse_dispatch():
    assert inverse(C, "mp") == moore_penrose(C)
    assert inverse(C, "core-dagger") == core_dagger(C)
    with pytest.raises(IndexTooLarge):
        inverse(B, "core")
    with pytest.raises(ValueError):
        inverse(C, "bott-duffin")


@pytest.mark.parametrize("cls,keys", [
    ("one", ["AXA = A"]),
    ("two", ["XAX = X"]),
    ("one-two", ["AXA = A", "XAX = X"]),
    ("group", ["AXA = A", "XAX = X", "AX = XA"]),
])
def test_inverse_class_keys(cls, keys):
    assert list(check_inverse_class(C, C, cls)) == keys
