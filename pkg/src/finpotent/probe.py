"""Truncation study of a compact nilpotent operator on l^2 whose image is not closed.

The operator sends ``e_n`` to ``e_{n+1}/(n+1)`` for even ``n`` and kills odd
``e_n`` (1-based).  The points ``y_m = sum_{k<=m} e_{2k+1}/(2k+1)`` lie in its
image and converge in l^2, yet their minimal-norm preimages
``x_m = e_2 + e_4 + ... + e_{2m}`` have norm ``sqrt(m)``.  Unbounded
preimages of a convergent sequence of image points is the finite, testable
symptom of a non-closed image.

All linear algebra is exact; floats appear only in the emitted report.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .finite_potent import COUNTABLE, FinitePotentOperator
from .gen_inverse import moore_penrose
from .matrix import Matrix
from .scalars import abs2

TARGET_BOUND = math.pi ** 2 / 8 - 1
NORM_TOL = 1e-12


def truncated_weighted_shift(N: int) -> FinitePotentOperator:
    """``N x N`` truncation: ``e_n -> e_{n+1}/(n+1)`` for even ``n < N``."""
    if N < 4:
        raise ValueError("truncation size must be at least 4")
    rows = [[Fraction(0)] * N for _ in range(N)]
    for n in range(2, N, 2):
        rows[n][n - 1] = Fraction(1, n + 1)
    return FinitePotentOperator(Matrix(rows), COUNTABLE)


def _sq_norm(v) -> Fraction:
    return sum((abs2(x) for x in v), Fraction(0))


@dataclass
class TruncationReport:
    levels: list = field(default_factory=list)
    target_norms: list = field(default_factory=list)
    preimage_norms: list = field(default_factory=list)
    # exact squared norms, kept so the sqrt(m) law can be checked without floats
    target_sq_norms: list = field(default_factory=list)
    preimage_sq_norms: list = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "target_norm", "preimage_norm"])
        for m, t, p in zip(self.levels, self.target_norms, self.preimage_norms):
            w.writerow([m, repr(t), repr(p)])
        return buf.getvalue()


def preimage_growth(max_m: int) -> TruncationReport:
    if max_m < 2:
        raise ValueError("max_m must be at least 2")
    N = 2 * max_m + 2
    phi = truncated_weighted_shift(N)
    mp = moore_penrose(phi)
    report = TruncationReport()
    y = [Fraction(0)] * N
    for m in range(1, max_m + 1):
        # 1-based e_{2m+1} is 0-based index 2m
        y[2 * m] = Fraction(1, 2 * m + 1)
        x = mp @ y
        assert phi @ x == tuple(y), "minimal-norm preimage does not map onto the target"
        ty, tx = _sq_norm(y), _sq_norm(x)
        report.levels.append(m)
        report.target_sq_norms.append(ty)
        report.preimage_sq_norms.append(tx)
        report.target_norms.append(math.sqrt(ty))
        report.preimage_norms.append(math.sqrt(tx))
        assert abs(math.sqrt(tx) - math.sqrt(m)) <= NORM_TOL, f"preimage norm off sqrt({m})"
        assert float(ty) <= TARGET_BOUND + 1e-9, "target norm exceeded its limit"
    return report
