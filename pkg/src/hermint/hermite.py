"""Physicists' Hermite polynomials as exact integer coefficient tuples.

A ``Poly1`` is a tuple of ints, index = power of x, with no trailing
zeros; the zero polynomial is ``()``.
"""
from functools import lru_cache
import threading

from . import _kernels

_cache = [(1,), (0, 2)]
_lock = threading.Lock()


def normalize(coeffs):
    """Strip trailing zeros and freeze as a tuple."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(p):
    return len(p) - 1


def hermite(n):
    """H_n(x) via H_n = 2x H_{n-1} - 2(n-1) H_{n-2}; cached per process."""
    if n < 0:
        raise ValueError("hermite index must be non-negative")
    if n < len(_cache):
        return _cache[n]
    with _lock:
        while len(_cache) <= n:
            k = len(_cache)
            prev, prev2 = _cache[k - 1], _cache[k - 2]
            row = [0] * (k + 1)
            for i, c in enumerate(prev):
                row[i + 1] += 2 * c
            for i, c in enumerate(prev2):
                row[i] -= 2 * (k - 1) * c
            _cache.append(tuple(row))
    return _cache[n]


def poly_mul(a, b):
    return normalize(_kernels.poly_mul(list(a), list(b)))


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return normalize(out)


def poly_sub(a, b):
    return poly_add(a, poly_scale(b, -1))


def poly_scale(a, c):
    return normalize(c * x for x in a)


def poly_divexact(a, b):
    """Exact quotient a / b over the integers; raises if not exact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(rem) - 1 < db:
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return ()
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quot[i - db] = q
        for j, bj in enumerate(b):
            rem[i - db + j] -= q * bj
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return normalize(quot)


def derivative(p):
    return normalize(i * c for i, c in enumerate(p) if i)


def hermite_product(indices):
    """Exact product of H_i(x) over ``indices``."""
    return _sorted_product(tuple(sorted((i for i in indices if i), reverse=True)))


@lru_cache(maxsize=1 << 16)
def _sorted_product(key):
    if not key:
        return (1,)
    if len(key) == 1:
        return hermite(key[0])
    return poly_mul(_sorted_product(key[:-1]), hermite(key[-1]))
