"""Determinant integrals D_n and large-index diagnostics.

``dn_normalized(n, r)`` is sqrt(2/pi) * int det[H_{n+i+j}(x)]_{i,j<r} e^{-2x^2} dx.
Multiply by sqrt(pi/2) (:data:`UNNORMALIZED_FACTOR`) to get the plain integral.
"""
from dataclasses import dataclass
from itertools import permutations
import math

from .closed import closed_H1, closed_H2, closed_H3, recurrence_H4
from .errors import CatalogueError, DomainError, HermintError
from .exact import Rat
from .hermite import hermite, poly_divexact, poly_mul, poly_sub
from .moments import integrate_poly, oracle_H

UNNORMALIZED_FACTOR = "sqrt(pi/2)"
LN2 = math.log(2.0)


@dataclass(frozen=True)
class DetSpec:
    n: int
    r: int = 4

    def __post_init__(self):
        if self.n < 0 or self.r < 1:
            raise ValueError(f"invalid determinant spec {self}")


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def dn_terms(spec):
    """The 24 signed index quadruples of the permutation expansion (r = 4)."""
    if spec.r != 4:
        raise DomainError("the quadruple expansion is defined for r = 4 only")
    return [(_perm_sign(p), tuple(spec.n + i + p[i] for i in range(4)))
            for p in permutations(range(4))]


def dn_by_permutations(spec):
    """Leibniz expansion into signed multi-index integrals.

    r = 4 evaluates each quadruple by the four-index recurrence; other sizes
    integrate each product directly.
    """
    if spec.r == 4:
        return sum((s * recurrence_H4(q) for s, q in dn_terms(spec)), Rat(0))
    total = Rat(0)
    for p in permutations(range(spec.r)):
        total += _perm_sign(p) * oracle_H([spec.n + i + p[i] for i in range(spec.r)])
    return total


def det_polynomial(spec):
    """det[H_{n+i+j}(x)] over Z[x] by fraction-free (Bareiss) elimination."""
    r = spec.r
    a = [[hermite(spec.n + i + j) for j in range(r)] for i in range(r)]
    sign = 1
    prev = (1,)
    for k in range(r - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, r) if a[i][k]), None)
            if swap is None:
                return ()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, r):
            for j in range(k + 1, r):
                num = poly_sub(poly_mul(a[i][j], a[k][k]), poly_mul(a[i][k], a[k][j]))
                a[i][j] = poly_divexact(num, prev)
        prev = a[k][k]
    det = a[r - 1][r - 1]
    return det if sign == 1 else tuple(-c for c in det)


def dn_by_polynomial(spec):
    return integrate_poly(det_polynomial(spec))


def dn_paths(spec):
    """Both evaluations, as (permutation expansion, direct polynomial)."""
    return dn_by_permutations(spec), dn_by_polynomial(spec)


def dn_normalized(spec):
    """Normalized determinant integral; raises if the two evaluations disagree."""
    if not isinstance(spec, DetSpec):
        spec = DetSpec(*spec)
    a, b = dn_paths(spec)
    if a != b:
        raise HermintError(f"determinant paths disagree for {spec}: {a} != {b}")
    return a


def _log_int(x):
    # x > 0; use the top 64 bits as mantissa
    shift = max(x.bit_length() - 64, 0)
    return math.log(x >> shift) + shift * LN2


def log_magnitude(x):
    """ln|x| for a nonzero rational, without converting x itself to float."""
    x = Rat(x)
    if x == 0:
        raise DomainError("log of zero")
    return _log_int(abs(x.numerator)) - _log_int(x.denominator)


def approx(x, digits=17):
    """Decimal approximation of a rational as a string in scientific notation."""
    from decimal import Context
    x = Rat(x)
    if not x:
        return format(0.0, f".{digits - 1}e")
    ctx = Context(prec=digits)
    return format(ctx.divide(ctx.create_decimal(x.numerator),
                             ctx.create_decimal(x.denominator)), f".{digits - 1}e")


@dataclass(frozen=True)
class AsymRow:
    n: int
    quantity: str
    exact_value: Rat
    exact: float
    predicted: float
    abs_error: float
    scale: str  # "log" rows compare ln|value|, "linear" rows the value itself


def _even(n, label):
    if n % 2:
        raise DomainError(f"{label} needs even n, got {n}")


def _growth(value_fn, predicted_log_fn, parity=None):
    def row(n, label):
        if parity:
            _even(n, label)
        v = value_fn(n)
        ex = log_magnitude(v)
        pred = predicted_log_fn(n)
        return v, ex, pred, "log"
    return row


def _ratio(value_fn, predicted_fn, parity=None, n_min=1):
    def row(n, label):
        if parity:
            _even(n, label)
        if n < n_min:
            raise DomainError(f"{label} needs n >= {n_min}")
        v = value_fn(n)
        return v, float(v), predicted_fn(n), "linear"
    return row


def _lnn_e(n):
    return math.log(n) - 1.0


CATALOGUE = {
    "H_n": _growth(closed_H1, lambda n: n / 2 * _lnn_e(n) + 0.5 * LN2, parity=True),
    "H_nn": _growth(lambda n: closed_H2(n, n),
                    lambda n: n * _lnn_e(n) + n * LN2 + 0.5 * LN2),
    "H_nnn": _growth(lambda n: closed_H3(n, n, n),
                     lambda n: 1.5 * n * _lnn_e(n) + 1.5 * LN2, parity=True),
    "H_nnn/H_n+1,n-1,n": _ratio(lambda n: closed_H3(n, n, n) / closed_H3(n + 1, n - 1, n),
                                lambda n: 1 - 2 / n, parity=True, n_min=2),
    "H_nnn/H_n-1,n-1,n": _ratio(lambda n: closed_H3(n, n, n) / closed_H3(n - 1, n - 1, n),
                                lambda n: n - 1, parity=True, n_min=2),
    "H_nnn/H_n-2,n,n": _ratio(lambda n: closed_H3(n, n, n) / closed_H3(n - 2, n, n),
                              lambda n: n - 3, parity=True, n_min=2),
    "H_nn0/H_n+1,n-1,0": _ratio(lambda n: closed_H3(n, n, 0) / closed_H3(n + 1, n - 1, 0),
                                lambda n: -1.0),
    "H_nn0/H_n-1,n-1,0": _ratio(lambda n: closed_H3(n, n, 0) / closed_H3(n - 1, n - 1, 0),
                                lambda n: 2 * n - 1),
}


def asym_table(quantity, n_values):
    """Rows comparing exact values with the large-n laws for ``quantity``."""
    try:
        fn = CATALOGUE[quantity]
    except KeyError:
        raise CatalogueError(
            f"unknown quantity {quantity!r}; choose from {', '.join(CATALOGUE)}") from None
    rows = []
    for n in n_values:
        v, ex, pred, scale = fn(n, quantity)
        rows.append(AsymRow(n, quantity, v, ex, float(pred), abs(ex - pred), scale))
    return rows
