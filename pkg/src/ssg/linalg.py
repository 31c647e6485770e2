"""Exact linear solves over the rationals.

Rows are scaled to integers and reduced with Bareiss' fraction-free
elimination, so every intermediate entry is an integer minor of the input
and divisions are exact.  Only the final back substitution leaves the
integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


class SingularSystemError(ArithmeticError):
    pass


def _integer_rows(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[list[int]]:
    rows = []
    for row, rhs in zip(a, b):
        entries = [Fraction(x) for x in row] + [Fraction(rhs)]
        scale = lcm(*(x.denominator for x in entries))
        rows.append([x.numerator * (scale // x.denominator) for x in entries])
    return rows


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction]:
    """Return the unique ``x`` with ``a @ x == b``.

    Pivots are chosen among the nonzero candidates of a column by smallest
    bit length, which keeps the integer minors short without affecting the
    (exact) result.

    Raises:
        SingularSystemError: if ``a`` is singular.
    """
    n = len(a)
    if len(b) != n or any(len(row) != n for row in a):
        raise ValueError("expected a square system")
    m = _integer_rows(a, b)
    prev = 1
    for k in range(n):
        candidates = [i for i in range(k, n) if m[i][k]]
        if not candidates:
            raise SingularSystemError(f"singular system (column {k})")
        p = min(candidates, key=lambda i: m[i][k].bit_length())
        m[k], m[p] = m[p], m[k]
        pivot = m[k][k]
        for i in range(k + 1, n):
            f = m[i][k]
            row = m[i]
            for j in range(k + 1, n + 1):
                row[j] = (pivot * row[j] - f * m[k][j]) // prev
            row[k] = 0
        prev = pivot
    x = [Fraction(0)] * n
    for k in reversed(range(n)):
        s = Fraction(m[k][n]) - sum(m[k][j] * x[j] for j in range(k + 1, n))
        x[k] = s / m[k][k]
    return x
