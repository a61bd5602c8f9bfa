"""Fallback elimination kernels (numpy for F_p, plain Python for Q).

Same contract as the compiled ``_core`` module: operate in place, return the
pivot columns, first-nonzero pivoting.
"""
from __future__ import annotations

import numpy as np


def echelon_modp(a: np.ndarray, p: int, reduced: bool = True) -> list[int]:
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, col])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv], col:] = a[[piv, r], col:]
        inv = pow(int(a[r, col]), -1, p)
        if inv != 1:
            a[r, col:] = (a[r, col:] * inv) % p
        below = a[r + 1 :, col]
        rows = r + 1 + np.flatnonzero(below)
        if reduced:
            rows = np.concatenate([np.flatnonzero(a[:r, col]), rows])
        if rows.size:
            a[rows, col:] = (a[rows, col:] - np.outer(a[rows, col], a[r, col:])) % p
        pivots.append(col)
        r += 1
    return pivots


def echelon_object(a: np.ndarray, reduced: bool = True) -> list[int]:
    """Exact elimination on an object array of Fractions."""
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i, col] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[[r, piv], col:] = a[[piv, r], col:]
        inv = 1 / a[r, col]
        for j in range(col, ncols):
            a[r, j] = a[r, j] * inv
        for i in range(0 if reduced else r + 1, nrows):
            if i == r or a[i, col] == 0:
                continue
            f = a[i, col]
            for j in range(col, ncols):
                a[i, j] = a[i, j] - f * a[r, j]
        pivots.append(col)
        r += 1
    return pivots
