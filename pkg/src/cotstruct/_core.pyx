# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels over F_p.

Matrices are C-contiguous int64 arrays with entries already reduced to [0, p).
Every routine works in place and returns the list of pivot columns.
"""
import numpy as np
cimport numpy as cnp

ctypedef long long i64


cdef inline i64 _inv(i64 a, i64 p) nogil:
    cdef i64 t = 0, new_t = 1, r = p, new_r = a, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t


def echelon_modp(cnp.ndarray[i64, ndim=2, mode="c"] a not None, i64 p, bint reduced=True):
    cdef Py_ssize_t nrows = a.shape[0], ncols = a.shape[1]
    cdef i64[:, ::1] m = a
    cdef Py_ssize_t r = 0, col, i, j, piv
    cdef i64 inv, f, tmp
    pivots = []
    for col in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(col, ncols):
                tmp = m[r, j]
                m[r, j] = m[piv, j]
                m[piv, j] = tmp
        inv = _inv(m[r, col], p)
        if inv != 1:
            for j in range(col, ncols):
                m[r, j] = (m[r, j] * inv) % p
        for i in range(0 if reduced else r + 1, nrows):
            if i == r:
                continue
            f = m[i, col]
            if f == 0:
                continue
            f = p - f
            for j in range(col, ncols):
                if m[r, j] != 0:
                    m[i, j] = (m[i, j] + f * m[r, j]) % p
        pivots.append(col)
        r += 1
    return pivots
