"""Exact arithmetic primitives.

``Rat`` is the standard library :class:`fractions.Fraction`: always in
lowest terms, positive denominator, and zero stored as ``0/1``.
"""
from fractions import Fraction
from functools import lru_cache
import math

from .errors import DomainError

Rat = Fraction


def is_valid_df_arg(a):
    """True when ``a!!`` is defined: ``a >= -1`` or ``a`` negative odd."""
    return a >= -1 or a % 2 == 1


@lru_cache(maxsize=4096)
def _positive_df(a):
    # a >= 1 here; a!! as an int
    result = 1
    for v in range(a, 1, -2):
        result *= v
    return result


def double_factorial(a):
    """Return ``a!!`` as an exact :class:`Rat`.

    ``0!! = 1!! = 1`` and ``a!! = a * (a-2)!!``.  Negative odd arguments
    follow from running the recursion backwards, ``a!! = (a+2)!!/(a+2)``,
    giving ``(-1)!! = 1``, ``(-3)!! = -1``, ``(-5)!! = 1/3``.

    Raises :class:`DomainError` for even negative arguments.
    """
    a = int(a)
    if a >= 0:
        return Rat(_positive_df(a) if a > 1 else 1)
    if a % 2 == 0:
        raise DomainError(f"double factorial undefined for even negative {a}")
    # a = -(2p+1): a!! = (-1)^p / (2p-1)!!
    p = (-a - 1) // 2
    sign = -1 if p % 2 else 1
    return Rat(sign, _positive_df(2 * p - 1) if p > 0 else 1)


def binomial(p, k):
    if not 0 <= k <= p:
        raise DomainError(f"binomial({p}, {k}) requires 0 <= k <= p")
    return math.comb(p, k)


def is_even_sum(indices):
    return sum(indices) % 2 == 0


def sign_power(e):
    """``(-1)**e`` for an integer exponent (negative allowed)."""
    return -1 if e % 2 else 1
