import math
from fractions import Fraction as F

import pytest

from finpotent.finite_potent import COUNTABLE
from finpotent.probe import TARGET_BOUND, preimage_growth, truncated_weighted_shift


def test_shift_action():
    phi = truncated_weighted_shift(4)
    assert phi.ambient == COUNTABLE
    assert phi.block @ (0, 1, 0, 0) == (0, 0, F(1, 3), 0)
    assert not any(phi.block @ (1, 0, 0, 0))


@pytest.mark.parametrize("N", [4, 7, 12])
def test_shift_squares_to_zero(N):
    phi = truncated_weighted_shift(N)
    assert (phi @ phi).is_zero()
    assert not phi.is_zero()


def test_small_truncation_rejected():
    with pytest.raises(ValueError):
        truncated_weighted_shift(3)
    with pytest.raises(ValueError):
        preimage_growth(1)


def test_first_levels():
    r = preimage_growth(4)
    assert r.levels == [1, 2, 3, 4]
    assert r.preimage_norms[0] == 1.0
    assert r.preimage_norms[3] == 2.0
    assert r.target_sq_norms[0] == F(1, 9)
    assert r.target_sq_norms[1] == F(1, 9) + F(1, 25)


def test_sqrt_law_and_bounded_targets():
    r = preimage_growth(100)
    assert r.preimage_sq_norms == [F(m) for m in r.levels]
    assert all(abs(p - math.sqrt(m)) <= 1e-12 for m, p in zip(r.levels, r.preimage_norms))
    assert r.preimage_norms[-1] == 10.0
    assert max(r.target_norms) < 0.49
    assert all(t < TARGET_BOUND for t in r.target_sq_norms)


def test_monotone():
    r = preimage_growth(30)
    assert all(a < b for a, b in zip(r.target_sq_norms, r.target_sq_norms[1:]))
    assert all(a < b for a, b in zip(r.preimage_sq_norms, r.preimage_sq_norms[1:]))


def test_csv():
    text = preimage_growth(3).to_csv()
    lines = text.splitlines()
    assert lines[0] == "m,target_norm,preimage_norm"
    assert len(lines) == 4
    assert lines[1].startswith("1,0.333")
    assert text.endswith("\n") and "\r" not in text
