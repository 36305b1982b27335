"""Exact dense linear algebra over Fractions.

Small helper routines for the handful of square systems this package
solves: barycentric coordinate systems, basis-change systems, and the
LDL^T pivots used for the positive-definiteness check.  Everything is
exact; no pivot-size heuristics are needed, only nonzero pivots.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import as_rational

__all__ = ["SingularMatrixError", "determinant", "solve", "invert", "ldl_pivots"]


class SingularMatrixError(ValueError):
    pass


def _copy(matrix) -> list[list[Fraction]]:
    rows = [[as_rational(v) for v in row] for row in matrix]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("square matrix required")
    return rows


def determinant(matrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination."""
    m = _copy(matrix)
    n = len(m)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def solve(matrix, rhs) -> list[Fraction]:
    """Solve A x = b exactly; raises SingularMatrixError if A is singular."""
    a = _copy(matrix)
    b = [as_rational(v) for v in rhs]
    n = len(a)
    if len(b) != n:
        raise ValueError("rhs length does not match matrix")
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("singular matrix")
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            b[col], b[pivot_row] = b[pivot_row], b[col]
        piv = a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / piv
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
                b[r] -= f * b[col]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        acc = b[r]
        for c in range(r + 1, n):
            acc -= a[r][c] * x[c]
        x[r] = acc / a[r][r]
    return x


def invert(matrix) -> list[list[Fraction]]:
    """Exact inverse via Gauss-Jordan on the augmented matrix."""
    a = _copy(matrix)
    n = len(a)
    aug = [row + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("singular matrix")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        piv = aug[col][col]
        aug[col] = [v / piv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def ldl_pivots(matrix) -> list[Fraction]:
    """Pivots of the (unpivoted) LDL^T factorization of a symmetric matrix.

    Stops early if a zero pivot blocks elimination, so the returned list
    may be shorter than the dimension; the matrix is positive definite
    iff all n pivots exist and are positive.  Raises ValueError for a
    non-symmetric input.
    """
    a = _copy(matrix)
    n = len(a)
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    pivots: list[Fraction] = []
    for k in range(n):
        d = a[k][k]
        pivots.append(d)
        if d == 0:
            break
        for i in range(k + 1, n):
            f = a[i][k] / d
            if f:
                for j in range(k + 1, n):
                    a[i][j] -= f * a[k][j]
    return pivots
