# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contracts as ``_pykernels``."""


def poly_mul(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    cdef object ai
    for i in range(na):
        ai = a[i]
        if ai:
            for j in range(nb):
                out[i + j] += ai * b[j]
    return out


def gauss_numerator(list coeffs):
    cdef Py_ssize_t top = (len(coeffs) - 1) // 2 if coeffs else 0
    cdef Py_ssize_t j
    cdef object acc = 0, df = 1
    for j in range(top + 1):
        acc = 4 * acc + coeffs[2 * j] * df
        df *= 2 * j + 1
    # Python-level shift: a C shift overflows past 63 bits
    return acc, (<object>1) << (2 * top)


cdef inline void _swap(long *x, long *y):
    cdef long t
    if x[0] < y[0]:
        t = x[0]; x[0] = y[0]; y[0] = t


cdef object _h4(long a, long b, long c, long d, dict memo):
    if (a + b + c + d) & 1:
        return 0
    # descending sorting network
    _swap(&a, &b); _swap(&c, &d); _swap(&a, &c); _swap(&b, &d); _swap(&b, &c)
    key = (a, b, c, d)
    v = memo.get(key)
    if v is not None:
        return v
    if a == 0:
        v = 1
    else:
        v = 0
        if a >= 2:
            v -= (a - 1) * _h4(a - 2, b, c, d, memo)
        if b:
            v += b * _h4(a - 1, b - 1, c, d, memo)
        if c:
            v += c * _h4(a - 1, b, c - 1, d, memo)
        if d:
            v += d * _h4(a - 1, b, c, d - 1, memo)
    memo[key] = v
    return v


def h4_value(long a, long b, long c, long d, dict memo):
    return _h4(a, b, c, d, memo)
