"""Exact integer row reduction: Hermite normal form with its transform."""

from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``x*a + y*b = g = gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def identity_matrix(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def determinant(m: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hermite_normal_form(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U, U_inv)`` with ``U @ A = H``, ``U`` unimodular and
    ``U_inv`` its inverse.  ``H`` is upper echelon with positive pivots and
    entries above each pivot reduced into ``[0, pivot)``.
    """
    h = [list(row) for row in a]
    m = len(h)
    ncols = len(h[0]) if m else 0
    u = identity_matrix(m)
    ui = identity_matrix(m)

    def combine(i, j, x, y, p, q):
        # rows (i, j) <- [[x, y], [p, q]] @ rows (i, j), a determinant-1 change
        for mat in (h, u):
            ri, rj = mat[i], mat[j]
            mat[i] = [x * s + y * t for s, t in zip(ri, rj)]
            mat[j] = [p * s + q * t for s, t in zip(ri, rj)]
        # columns of the inverse pick up the inverse matrix [[q, -y], [-p, x]]
        for row in ui:
            ci, cj = row[i], row[j]
            row[i], row[j] = q * ci - p * cj, -y * ci + x * cj

    r = 0
    for col in range(ncols):
        if r == m:
            break
        for i in range(r + 1, m):
            if h[i][col]:
                a_, b_ = h[r][col], h[i][col]
                g, x, y = xgcd(a_, b_)
                combine(r, i, x, y, -b_ // g, a_ // g)
        if h[r][col] == 0:
            continue
        if h[r][col] < 0:
            _negate(h, u, ui, r)
        piv = h[r][col]
        for i in range(r):
            q = h[i][col] // piv
            if q:
                _add_row(h, u, ui, i, r, -q)
        r += 1
    return h, u, ui


def _negate(h, u, ui, r):
    h[r] = [-v for v in h[r]]
    u[r] = [-v for v in u[r]]
    for row in ui:
        row[r] = -row[r]


def _add_row(h, u, ui, i, j, c):
    # row_i += c * row_j ; inverse: col_j -= c * col_i
    h[i] = [s + c * t for s, t in zip(h[i], h[j])]
    u[i] = [s + c * t for s, t in zip(u[i], u[j])]
    for row in ui:
        row[j] -= c * row[i]
