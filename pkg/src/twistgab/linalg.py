"""Gaussian elimination over F_p (integer residues) and over F_{q^n}.

Both variants use "first nonzero" pivoting; exact arithmetic needs no
numerical pivot strategy.  Matrices are lists of rows and are never
modified in place.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

# -- prime field, integer entries ---------------------------------------------


def rref_mod(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p and the list of pivot columns."""
    m = [[x % p for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank_mod(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref_mod(rows, p)[1])


def nullspace_mod(rows: Sequence[Sequence[int]], p: int, ncols: int | None = None) -> list[list[int]]:
    """Basis of {v : rows @ v = 0} over F_p."""
    if ncols is None:
        ncols = len(rows[0])
    m, pivots = rref_mod(rows, p) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = -m[r][f] % p
        basis.append(v)
    return basis


def solve_mod(rows: Sequence[Sequence[int]], rhs: Sequence[int], p: int) -> list[int] | None:
    """One solution of rows @ x = rhs over F_p, or None if inconsistent."""
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    m, pivots = rref_mod(aug, p)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for r, c in enumerate(pivots):
        x[c] = m[r][ncols]
    return x


def batch_rank_mod(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks over F_p of a stack of matrices with shape (batch, rows, cols)."""
    m = np.array(mats, dtype=np.int64) % p
    batch, nrows, ncols = m.shape
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, -1, p)
    rank = np.zeros(batch, dtype=np.int64)
    row_ids = np.arange(nrows)
    all_b = np.arange(batch)
    for c in range(ncols):
        cand = (m[:, :, c] != 0) & (row_ids[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = all_b[has]
        piv = cand[b].argmax(axis=1)
        r = rank[b]
        top = m[b, r].copy()
        m[b, r] = m[b, piv]
        m[b, piv] = top
        pivot_row = m[b, r] * inv[m[b, r, c]][:, None] % p
        m[b, r] = pivot_row
        below = row_ids[None, :] > r[:, None]
        factor = np.where(below, m[b, :, c], 0)
        m[b] = (m[b] - factor[:, :, None] * pivot_row[:, None, :]) % p
        rank[b] += 1
    return rank


# -- extension field, FieldElement entries ------------------------------------


def rref(rows, field):
    """Reduced row echelon form over ``field`` and its pivot columns."""
    m = [list(row) for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(rows, field, ncols: int | None = None):
    """Basis of the right nullspace, one vector per free column (in order)."""
    if ncols is None:
        ncols = len(rows[0])
    m, pivots = rref(rows, field) if rows else ([], [])
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for r, c in enumerate(pivots):
            v[c] = -m[r][f]
        basis.append(v)
    return basis


def determinant(rows, field):
    """Determinant of a square matrix by elimination."""
    m = [list(row) for row in rows]
    size = len(m)
    det = field.one
    for c in range(size):
        piv = next((i for i in range(c, size) if m[i][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, size):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det
