"""Non-oracle evaluation paths for the one- to four-index integrals."""
from dataclasses import dataclass
import math
import threading

from . import _kernels
from .errors import ParityError, UnavailableDegreeError
from .exact import Rat, binomial, double_factorial as df, sign_power


@dataclass(frozen=True)
class QuadIndex:
    n: int
    m: int
    l: int
    k: int

    def __post_init__(self):
        if min(self.n, self.m, self.l, self.k) < 0:
            raise ValueError(f"negative index in {self}")

    @classmethod
    def of(cls, indices):
        idx = list(indices) + [0] * (4 - len(indices))
        if len(idx) != 4:
            raise ValueError("QuadIndex takes at most four indices")
        return cls(*idx)

    @property
    def sum_parity(self):
        return (self.n + self.m + self.l + self.k) % 2

    def as_tuple(self):
        return (self.n, self.m, self.l, self.k)


def closed_H1(n):
    if n % 2:
        return Rat(0)
    return sign_power(n // 2) * df(n - 1)


def closed_H2(n, m):
    """Two-index closed form with sign (-1)^((n-m)/2)."""
    if (n + m) % 2:
        return Rat(0)
    return sign_power((n - m) // 2) * df(n + m - 1)


def printed_H2(n, m):
    """Two-index form with the exponent (n+m)/2 exactly as printed.

    Kept for diagnostics only; it disagrees with the integral whenever
    (n-m)/2 and (n+m)/2 differ in parity, i.e. whenever m is odd.
    """
    if (n + m) % 2:
        return Rat(0)
    return sign_power((n + m) // 2) * df(n + m - 1)


def closed_H3(n, m, l):
    if (n + m + l) % 2:
        return Rat(0)
    return df(n + m - l - 1) * df(n - m + l - 1) * df(-n + m + l - 1)


def h4_prefactor(n, m, l, k):
    """(-1)^k (n+m-l-k-1)!! (n-m+l-k-1)!! (-n+m+l-k-1)!!; even sums only."""
    if (n + m + l + k) % 2:
        raise ParityError("four-index prefactor needs an even index sum")
    return (sign_power(k) * df(n + m - l - k - 1) * df(n - m + l - k - 1)
            * df(-n + m + l - k - 1))


def _lookup_pk(pk_source, k):
    try:
        poly = pk_source(k) if callable(pk_source) else pk_source[k]
    except (KeyError, IndexError) as exc:
        raise UnavailableDegreeError(f"no P_{k} available") from exc
    if poly is None:
        raise UnavailableDegreeError(f"no P_{k} available")
    return poly


def closed_H4(q, pk_source=None):
    """Four-index integral from the double-factorial prefactor times P_k(n,m,l).

    ``pk_source`` is a mapping ``k -> SymPoly3`` or a callable; by default
    the interpolated polynomials are used.
    """
    if not isinstance(q, QuadIndex):
        q = QuadIndex.of(q)
    if q.sum_parity:
        return Rat(0)
    if pk_source is None:
        from .pk import pk_interpolate
        pk_source = pk_interpolate
    poly = _lookup_pk(pk_source, q.k)
    return h4_prefactor(q.n, q.m, q.l, q.k) * poly(q.n, q.m, q.l)


_memo = {}
_memo_lock = threading.Lock()


def recurrence_H4(q):
    """Four-index integral by H_n(x) = 2x H_{n-1} - 2(n-1) H_{n-2} and parts.

    Indices are sorted descending and the largest one is lowered; every step
    reduces the index sum by two.
    """
    if not isinstance(q, QuadIndex):
        q = QuadIndex.of(q)
    # memo inserts are idempotent; the lock just avoids duplicated work
    with _memo_lock:
        return Rat(_kernels.h4_value(q.n, q.m, q.l, q.k, _memo))


def clear_recurrence_cache():
    with _memo_lock:
        _memo.clear()


def expanded_coeff_H1(n):
    """n! times the r^n coefficient of the one-variable series expansion."""
    if n % 2:
        raise ParityError(f"odd index {n}")
    h = n // 2
    return Rat(sign_power(h) * binomial(n, n) * math.factorial(n),
               math.factorial(h) * 2 ** h)


def expanded_coeff_H2(n, m):
    """n! m! times the r^n s^m coefficient of the two-variable expansion."""
    if (n + m) % 2:
        raise ParityError(f"odd index sum {n}+{m}")
    h = (n + m) // 2
    return Rat(sign_power((m - n) // 2) * binomial(n + m, n)
               * math.factorial(n) * math.factorial(m),
               math.factorial(h) * 2 ** h)
