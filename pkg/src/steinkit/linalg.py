"""Exact linear algebra for small integer matrices.

Determinants use Bareiss fraction-free elimination; signatures use
symmetric congruence diagonalization over the rationals; linear solves use
plain Gaussian elimination with ``fractions.Fraction``. Matrices here are
linking matrices of handle diagrams, so sizes are tiny and exactness
matters more than speed.
"""

from __future__ import annotations

from fractions import Fraction


Matrix = list[list[int]]


def determinant(matrix) -> int:
    """Exact determinant of an integer matrix (Bareiss elimination)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                assert value % prev == 0
                m[i][j] = value // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def signature(matrix) -> int:
    """Signature of a symmetric matrix by congruence diagonalization.

    Pivots on a nonzero diagonal entry when one exists; otherwise, if some
    off-diagonal entry among the remaining rows is nonzero, adds that row
    and column into the pivot row to create a nonzero diagonal entry.
    """
    n = len(matrix)
    m = [[Fraction(matrix[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            assert m[i][j] == m[j][i], "matrix not symmetric"
    sig = 0
    for k in range(n):
        if m[k][k] == 0:
            pivot = next(
                (i for i in range(k + 1, n) if m[i][i] != 0), None
            )
            if pivot is not None:
                _swap(m, k, pivot)
            else:
                off = next(
                    (j for j in range(k + 1, n) if m[k][j] != 0), None
                )
                if off is None:
                    continue  # zero row: no contribution
                # remaining diagonal is zero, so this makes m[k][k] = 2*m[k][off]
                _add_into(m, k, off)
        assert m[k][k] != 0
        sig += 1 if m[k][k] > 0 else -1
        for i in range(k + 1, n):
            if m[i][k] == 0:
                continue
            factor = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= factor * m[k][j]
            for j in range(k, n):
                m[j][i] -= factor * m[j][k]
    return sig


def _swap(m, a, b):
    m[a], m[b] = m[b], m[a]
    for row in m:
        row[a], row[b] = row[b], row[a]


def _add_into(m, a, b):
    for j in range(len(m)):
        m[a][j] += m[b][j]
    for row in m:
        row[a] += row[b]


def solve(matrix, rhs) -> list[Fraction] | None:
    """Exact solution of matrix @ x = rhs, or None if singular."""
    n = len(matrix)
    m = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot is None:
            return None
        m[k], m[pivot] = m[pivot], m[k]
        for i in range(k + 1, n):
            factor = m[i][k] / m[k][k]
            if factor:
                for j in range(k, n + 1):
                    m[i][j] -= factor * m[k][j]
    x = [Fraction(0)] * n
    for k in range(n - 1, -1, -1):
        acc = m[k][n] - sum(m[k][j] * x[j] for j in range(k + 1, n))
        x[k] = acc / m[k][k]
    return x
