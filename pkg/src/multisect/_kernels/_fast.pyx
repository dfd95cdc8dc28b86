# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot coefficient kernels.

Coefficients stay generic Python objects (exact rationals, cyclotomic
numbers); the win comes from C-level loop control and list access.
Mirrors `multisect._kernels.pure` exactly.
"""

BACKEND = "compiled"


def conv(list a, list b):
    """Dense polynomial product: c[k] = sum a[i]*b[k-i]."""
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        for j in range(lb):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def series_div(list num, list den, Py_ssize_t count):
    """First `count` Taylor coefficients of num(x)/den(x); requires den[0] == 1.

    Uses the linear recurrence c[k] = num[k] - sum_{i>=1} den[i]*c[k-i].
    """
    if count <= 0:
        return []
    cdef Py_ssize_t ld = len(den), ln = len(num), k, i, top
    cdef list out = [0] * count
    for k in range(count):
        acc = num[k] if k < ln else 0
        top = ld - 1 if ld - 1 < k else k
        for i in range(1, top + 1):
            di = den[i]
            if di:
                acc = acc - di * out[k - i]
        out[k] = acc
    return out
