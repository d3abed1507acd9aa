"""Hand-derived expressions for P_0 ... P_5, expanded to monomials.

Each builder transcribes the published nested form (powers of P_1 plus
terms in the product mnl) and expands it with :class:`Poly3`.
"""
from functools import lru_cache

from .poly3 import Poly3, SymPoly3


def _basics():
    n, m, l = Poly3.gens()
    p1 = m ** 2 + n ** 2 + l ** 2 - 2 * m * n - 2 * m * l - 2 * n * l
    e = m * n * l
    return n, m, l, p1, e


def _p0():
    return Poly3.const(1)


def _p1():
    return _basics()[3]


def _p2():
    n, m, l, p1, e = _basics()
    return (p1 - 1) ** 2 - 16 * e


def _p3():
    n, m, l, p1, e = _basics()
    return p1 ** 3 - 8 * p1 ** 2 + (-48 * e + 16) * p1 - 64 * e * (m + n + l - 3)


def _p4():
    n, m, l, p1, e = _basics()
    return (p1 ** 4 - 20 * p1 ** 3 + (-96 * e + 118) * p1 ** 2 + (960 * e - 180) * p1
            - 256 * e * (m ** 3 + n ** 3 + l ** 3)
            + 256 * e * (m ** 2 * l + m ** 2 * n + l ** 2 * m + l ** 2 * n + n ** 2 * l + n ** 2 * m)
            + 2304 * e ** 2 - 1536 * e * (m * n + m * l + l * n) + 2304 * e * (m + n + l)
            - 3936 * e + 81)


def _p5():
    n, m, l, p1, e = _basics()
    s1 = m + n + l
    return (p1 ** 5 - 160 * e * p1 ** 3 - 40 * p1 ** 4 - 640 * e * s1 * p1 ** 2
            + 528 * p1 ** 3 + 3840 * e ** 2 * p1 + 3200 * e * p1 ** 2
            - 7680 * e * (m ** 3 * (n + l) + n ** 3 * (m + l) + l ** 3 * (m + n))
            + 14336 * e * (m ** 3 + n ** 3 + l ** 3)
            + 15360 * e * (m ** 2 * n ** 2 + n ** 2 * l ** 2 + m ** 2 * l ** 2)
            - 2560 * p1 ** 2 + 33280 * e ** 2 * s1
            - 26624 * e * (m ** 2 * (l + n) + l ** 2 * (m + n) + n ** 2 * (m + l))
            - 17920 * e * p1 - 172032 * e ** 2
            + 122880 * e * (m * n + n * l + m * l)
            - 102400 * e * s1 + 4096 * p1 + 122880 * e)


_BUILDERS = (_p0, _p1, _p2, _p3, _p4, _p5)
MAX_FIXTURE = len(_BUILDERS) - 1


@lru_cache(maxsize=None)
def paper_pk(k):
    """Expanded P_k for 0 <= k <= 5."""
    if not 0 <= k <= MAX_FIXTURE:
        raise KeyError(k)
    return SymPoly3.from_poly(_BUILDERS[k]())


def ansatz_p2(c1, c2):
    """The k=2 ansatz (P_1 - 1)^2 + c1 mnl + c2 mnl(m+n+l)."""
    n, m, l, p1, e = _basics()
    return (p1 - 1) ** 2 + c1 * e + c2 * e * (m + n + l)
