"""Brute-force ground truth: integrate polynomials against Gaussian weights.

Every value here comes from expanding the integrand into monomials and
summing exact moments, so it is independent of any closed form.
"""
import threading

from . import _kernels
from .exact import Rat
from .hermite import hermite_product

# moment(2j) for the normalized weight sqrt(2/pi) e^{-2x^2}
_table = [Rat(1)]
_lock = threading.Lock()


def moment(k):
    """sqrt(2/pi) * int x^k e^{-2x^2} dx, exactly: (k-1)!!/4^(k/2) for even k."""
    if k < 0:
        raise ValueError("moment order must be non-negative")
    if k % 2:
        return Rat(0)
    j = k // 2
    if j >= len(_table):
        with _lock:
            while len(_table) <= j:
                i = len(_table)
                _table.append(_table[-1] * Rat(2 * i - 1, 4))
    return _table[j]


def moment_table(max_order):
    """Map even orders 2j <= max_order to their moments."""
    return {2 * j: moment(2 * j) for j in range(max_order // 2 + 1)}


def integrate_poly(p):
    if not p:
        return Rat(0)
    num, den = _kernels.gauss_numerator(list(p))
    return Rat(num, den)


def integrate_poly_slow(p):
    """Same integral, summing coefficient * moment term by term."""
    return sum((c * moment(k) for k, c in enumerate(p)), Rat(0))


def oracle_H(indices):
    """Normalized integral of prod H_i(x) against e^{-2x^2}."""
    if sum(indices) % 2:
        return Rat(0)
    return integrate_poly(hermite_product(indices))


def native_moment(k):
    """(1/sqrt(pi)) * int x^k e^{-x^2} dx = (k-1)!!/2^(k/2) for even k."""
    if k % 2:
        return Rat(0)
    out = Rat(1)
    for i in range(1, k // 2 + 1):
        out *= Rat(2 * i - 1, 2)
    return out


def integrate_poly_native(p):
    """Integral of p against the native weight e^{-x^2}, divided by sqrt(pi)."""
    return sum((c * native_moment(k) for k, c in enumerate(p) if c), Rat(0))
