"""The symmetric polynomials P_k and the identities they satisfy.

P_k(n, m, l) is the four-index integral H_{nmlk} divided by its
double-factorial prefactor.  Three independent routes are provided:

* :func:`pk_interpolate` - tensor Newton interpolation of exact integrals;
* :func:`pk_ansatz_solve` - a symmetric ansatz fitted to the descent
  relations P_k(j, m, n) = prod (m-n-k+j+1+2i)^2 * P_j(k, m, n);
* :func:`pk_value_via_recurrence` - pointwise values from the polynomial
  form of the three-term recurrence.
"""
from functools import lru_cache
import threading

from .closed import h4_prefactor, recurrence_H4
from .errors import ParityError, RankDeficiencyError
from .exact import Rat, double_factorial as df, is_valid_df_arg, sign_power
from .moments import oracle_H
from .poly3 import Poly3, SymPoly3, monomial_symmetric, orbit_representatives

__all__ = [
    "interpolation_grid", "pk_interpolate", "pk_value_via_recurrence",
    "pk_ansatz_solve", "pk_recursion_check", "descent_factor",
    "triviality_product", "hsq_signs", "hsq_identity_check",
    "h4_identity_check", "ratio_identity_check",
]


def _resolve(pks):
    if pks is None:
        return pk_interpolate
    if callable(pks):
        return pks
    return pks.__getitem__


def interpolation_grid(k):
    """Nodes per variable (n, m, l): 2k+1 points stepping by two.

    The parity of n is chosen so that n+m+l+k is even on the whole grid.
    """
    evens = list(range(0, 4 * k + 1, 2))
    if k % 2:
        return list(range(1, 4 * k + 2, 2)), evens, evens
    return evens, evens, evens


def _newton_to_monomial(xs, ys):
    """Monomial coefficients of the polynomial through (xs[i], ys[i])."""
    dd = list(ys)
    size = len(xs)
    for level in range(1, size):
        for i in range(size - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    poly = [dd[-1]]
    for i in range(size - 2, -1, -1):
        # poly * (x - xs[i]) + dd[i]
        shifted = [Rat(0)] + poly
        for j, c in enumerate(poly):
            shifted[j] -= xs[i] * c
        shifted[0] += dd[i]
        poly = shifted
    return poly


_interp_lock = threading.Lock()


@lru_cache(maxsize=None)
def _interpolate_cached(k):
    ns, ms, ls = interpolation_grid(k)
    size = len(ns)
    vals = [[[recurrence_H4((n, m, l, k)) / h4_prefactor(n, m, l, k) for l in ls]
             for m in ms] for n in ns]
    # interpolate along n, then m, then l; vals[a][b][c] ends up as coefficients
    for b in range(size):
        for c in range(size):
            col = _newton_to_monomial([Rat(x) for x in ns], [vals[a][b][c] for a in range(size)])
            for a in range(size):
                vals[a][b][c] = col[a]
    for a in range(size):
        for c in range(size):
            col = _newton_to_monomial([Rat(x) for x in ms], [vals[a][b][c] for b in range(size)])
            for b in range(size):
                vals[a][b][c] = col[b]
    for a in range(size):
        for b in range(size):
            vals[a][b] = _newton_to_monomial([Rat(x) for x in ls], vals[a][b])
    return SymPoly3({(a, b, c): vals[a][b][c]
                     for a in range(size) for b in range(size) for c in range(size)})


def pk_interpolate(k):
    """P_k recovered from exact four-index integrals on a parity-aligned grid."""
    if k < 0:
        raise ValueError("k must be non-negative")
    with _interp_lock:
        return _interpolate_cached(k)


_rec_memo = {}


def pk_value_via_recurrence(n, m, l, j):
    """P_n(m, l, j) at a non-negative integer point, from the recurrence

    P_n = -(n-1) A B C P_{n-2} - m C P_{n-1}(m-1,l,j) - l B P_{n-1}(m,l-1,j)
          - j A P_{n-1}(m,l,j-1)

    with A = m+l-j-n+1, B = m-l+j-n+1, C = -m+l+j-n+1 and P_0 = 1.
    """
    if min(n, m, l, j) < 0:
        raise ValueError("arguments must be non-negative")
    return Rat(_pk_rec(n, m, l, j))


def _pk_rec(n, m, l, j):
    key = (n, m, l, j)
    v = _rec_memo.get(key)
    if v is not None:
        return v
    if n == 0:
        v = 1
    else:
        a = m + l - j - n + 1
        b = m - l + j - n + 1
        c = -m + l + j - n + 1
        v = 0
        if n >= 2:
            v -= (n - 1) * a * b * c * _pk_rec(n - 2, m, l, j)
        if m:
            v -= m * c * _pk_rec(n - 1, m - 1, l, j)
        if l:
            v -= l * b * _pk_rec(n - 1, m, l - 1, j)
        if j:
            v -= j * a * _pk_rec(n - 1, m, l, j - 1)
    _rec_memo[key] = v
    return v


def descent_factor(k, j):
    """prod_{i=0}^{k-j-1} (m - n - k + j + 1 + 2i)^2 as a polynomial in (m, n).

    Variables are slots 1 and 2 of :class:`Poly3` (slot 0 is unused).
    """
    _, m, n = Poly3.gens()
    out = Poly3.const(1)
    for i in range(k - j):
        lin = m - n + (-k + j + 1 + 2 * i)
        out = out * lin * lin
    return out


def _spiral(size):
    """Points of {0..size}^2 ring by ring around the origin."""
    pts = [(0, 0)]
    for r in range(1, size + 1):
        ring = [(r, b) for b in range(r + 1)] + [(a, r) for a in range(r - 1, -1, -1)]
        pts.extend(ring)
    return pts


@lru_cache(maxsize=None)
def pk_ansatz_solve(k, max_coord=None):
    """Fit a symmetric ansatz of degree 2k to the descent relations.

    Lower P_j are obtained by the same procedure.  Constraint rows come
    from the relations at points (m, n) in {0..max_coord}^2 (default 3k)
    and are added until the system has full column rank; otherwise
    :class:`RankDeficiencyError` reports the null-space dimension.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return SymPoly3.from_poly(Poly3.const(1))
    lower = [pk_ansatz_solve(j) for j in range(k)]
    reps = orbit_representatives(2 * k)
    basis = [monomial_symmetric(r) for r in reps]
    ncols = len(basis)

    pivots = []  # (pivot column, row, rhs), rows normalized with pivot entry 1
    for m, n in _spiral(3 * k if max_coord is None else max_coord):
        for j in range(k):
            row = [b(j, m, n) for b in basis]
            d = m - n
            factor = 1
            for i in range(k - j):
                factor *= (d - k + j + 1 + 2 * i) ** 2
            rhs = factor * lower[j](k, m, n)
            for col, prow, prhs in pivots:
                c = row[col]
                if c:
                    row = [x - c * y for x, y in zip(row, prow)]
                    rhs -= c * prhs
            lead = next((i for i, x in enumerate(row) if x), None)
            if lead is None:
                if rhs:
                    raise ArithmeticError(f"inconsistent descent constraints for k={k}")
                continue
            p = row[lead]
            pivots.append((lead, [x / p for x in row], rhs / p))
            if len(pivots) == ncols:
                break
        if len(pivots) == ncols:
            break
    if len(pivots) < ncols:
        nullity = ncols - len(pivots)
        raise RankDeficiencyError(
            f"descent constraints for k={k} leave a {nullity}-dimensional null space",
            nullity)

    sol = [Rat(0)] * ncols
    for col, row, rhs in reversed(pivots):
        sol[col] = rhs - sum(row[c] * sol[c] for c in range(ncols) if c != col and row[c])
    out = Poly3()
    for coef, b in zip(sol, basis):
        if coef:
            out = out + b * coef
    return SymPoly3.from_poly(out)


def pk_recursion_check(k, j, pks=None):
    """True iff P_k(j, m, n) == descent_factor(k, j) * P_j(k, m, n) identically.

    ``pks`` is a (P_k, P_j) pair, a mapping/callable provider, or None.
    """
    if not 0 <= j < k:
        raise ValueError("need 0 <= j < k")
    if isinstance(pks, tuple):
        pk, pj = pks
    else:
        get = _resolve(pks)
        pk, pj = get(k), get(j)
    lhs = pk.substitute(0, j)
    rhs = descent_factor(k, j) * pj.substitute(0, k)
    return lhs == rhs


def triviality_product(n, m, l, k):
    """The six-fold double-factorial product pairing each prefactor argument
    with its negative; equals (-1)^((n+m+l+k)/2)."""
    if (n + m + l + k) % 2:
        raise ParityError("triviality product needs an even index sum")
    return (df(l + m - n - k - 1) * df(l - m + n - k - 1) * df(-l + m + n - k - 1)
            * df(-l + m - n + k - 1) * df(-l - m + n + k - 1) * df(l - m - n + k - 1))


def _hsq_parts(q, pks):
    get = _resolve(pks)
    k, l, m, n = q
    lhs = oracle_H(q) ** 2
    rhs = df(-l + m + n - k - 1) ** 2 * get(l)(k, m, n) * get(k)(l, m, n)
    return lhs, rhs


def hsq_signs(q, pks=None):
    """Which overall sign makes H^2_{klmn} = s * (..)!!^2 P_l(k,m,n) P_k(l,m,n).

    Returns a dict with the verified sign (+1), the printed sign
    (-1)^((k+l+m+n)/2), and whether each one matches.
    """
    if sum(q) % 2:
        raise ParityError("identity needs an even index sum")
    lhs, rhs = _hsq_parts(q, pks)
    printed = sign_power(sum(q) // 2)
    return {"verified": lhs == rhs, "printed_sign": printed,
            "printed": lhs == printed * rhs}


def hsq_identity_check(q, pks=None):
    return hsq_signs(q, pks)["verified"]


def h4_identity_check(q, pks=None):
    """H^4_{klmn} == P_l(k,m,n) P_m(k,n,l) P_n(k,m,l) P_k(l,m,n) (-1)^(k+l+m+n)."""
    if sum(q) % 2:
        raise ParityError("identity needs an even index sum")
    get = _resolve(pks)
    k, l, m, n = q
    rhs = (get(l)(k, m, n) * get(m)(k, n, l) * get(n)(k, m, l) * get(k)(l, m, n)
           * sign_power(k + l + m + n))
    return oracle_H(q) ** 4 == rhs


def ratio_identity_check(k, l, pks=None, sample_range=12):
    """P_k(l,m,n) (m-n-k+l-1)!!^2 == P_l(k,m,n) (m-n+k-l-1)!!^2 at sampled (m, n).

    Points where either double factorial is undefined are skipped.  Raises
    if no point qualifies.
    """
    if k < l or l < 0:
        raise ValueError("need k >= l >= 0")
    get = _resolve(pks)
    pk, pl = get(k), get(l)
    checked = 0
    for m in range(sample_range + 1):
        for n in range(sample_range + 1):
            lo, hi = m - n - k + l - 1, m - n + k - l - 1
            if not (is_valid_df_arg(lo) and is_valid_df_arg(hi)):
                continue
            checked += 1
            if pk(l, m, n) * df(lo) ** 2 != pl(k, m, n) * df(hi) ** 2:
                return False
    if not checked:
        raise ValueError("no valid sample points")
    return True
