"""Slow, independent reference implementations used only by the tests."""
from __future__ import annotations

from fractions import Fraction


def faddeev_leverrier(m) -> list[int]:
    """Characteristic polynomial det(xI - M), constant term first, over exact rationals."""
    rows = [[Fraction(int(v)) for v in row] for row in m]
    n = len(rows)
    if n == 0:
        return [1]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
        prev = mk
        mk = [[sum(rows[i][t] * prev[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            mk[i][i] += coeffs[n - k + 1]
        am = [[sum(rows[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(am[i][i] for i in range(n)) / k
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def det_cofactor(m) -> int:
    rows = [list(map(int, r)) for r in m]
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    return sum((-1) ** j * rows[0][j] * det_cofactor([r[:j] + r[j + 1:] for r in rows[1:]])
               for j in range(n) if rows[0][j])
