"""Small Gaussian-elimination kernel shared by the exact and float paths.

Matrices are lists of rows.  With ``tol=None`` entries are compared to zero
exactly after conversion to ``Fraction``; otherwise pivots below ``tol`` count as zero.
"""

from fractions import Fraction


def row_echelon(rows, tol=None):
    """Return ``(reduced_rows, pivot_columns)`` using partial pivoting."""
    if tol is None:
        m = [[Fraction(v) for v in r] for r in rows]
    else:
        m = [list(r) for r in rows]
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        if tol is None:
            best = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        else:
            best = max(range(r, n_rows), key=lambda i: abs(m[i][c]))
            if abs(m[best][c]) <= tol:
                best = None
        if best is None:
            continue
        m[r], m[best] = m[best], m[r]
        piv = m[r][c]
        for i in range(r + 1, n_rows):
            f = m[i][c]
            if f == 0:
                continue
            f = f / piv
            row_i, row_r = m[i], m[r]
            for j in range(c, n_cols):
                row_i[j] -= f * row_r[j]
            row_i[c] = 0 * row_i[c]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows, tol=None):
    return len(row_echelon(rows, tol)[1])


def null_vector(rows, tol=None):
    """One nonzero vector ``v`` with ``rows @ v = 0``, or ``None``.

    The first free column gets coefficient 1.
    """
    m, pivots = row_echelon(rows, tol)
    n_cols = len(rows[0]) if rows else 0
    free = next((c for c in range(n_cols) if c not in pivots), None)
    if free is None:
        return None
    one = 1 if tol is None else 1.0
    v = [0 * one] * n_cols
    v[free] = one
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        s = sum(m[r][j] * v[j] for j in range(c + 1, n_cols))
        v[c] = -s / m[r][c]
    return v
