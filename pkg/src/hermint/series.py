"""Truncated multivariate power series and the generating-function path.

Multiplying the Hermite generating functions exp(2xr - r^2) for each
factor, weighting by e^{-2x^2} and integrating gives exp(Q) times
sqrt(pi/2), with Q a quadratic form in the series variables.  The
sqrt(pi/2) cancels against the normalization of the integrals, so
n! m! ... times the coefficient of r^n s^m ... in exp(Q) is the integral.
"""
from itertools import product
import math

from .errors import SeriesTruncationError
from .exact import Rat

VARIABLES = "rstu"


class SeriesMV:
    """Truncated power series in ``num_vars`` variables with exact coefficients.

    Only monomials of total degree <= ``order`` are kept.
    """

    def __init__(self, num_vars, order, coeffs=None):
        if not 1 <= num_vars <= 4:
            raise ValueError("num_vars must be between 1 and 4")
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        self.num_vars = num_vars
        self.order = order
        self.coeffs = {}
        for exp, c in (coeffs or {}).items():
            exp = tuple(exp)
            if len(exp) != num_vars:
                raise ValueError(f"exponent {exp} has wrong length")
            if sum(exp) <= order and c:
                self.coeffs[exp] = self.coeffs.get(exp, 0) + Rat(c)
        self.coeffs = {e: c for e, c in self.coeffs.items() if c}

    @classmethod
    def constant(cls, num_vars, order, value=1):
        return cls(num_vars, order, {(0,) * num_vars: value})

    @classmethod
    def variable(cls, num_vars, order, i):
        exp = [0] * num_vars
        exp[i] = 1
        return cls(num_vars, order, {tuple(exp): 1})

    def _check(self, other):
        if (self.num_vars, self.order) != (other.num_vars, other.order):
            raise ValueError("series shapes differ")

    def _lift(self, other):
        if isinstance(other, SeriesMV):
            self._check(other)
            return other
        return SeriesMV.constant(self.num_vars, self.order, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return SeriesMV(self.num_vars, self.order, out)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, SeriesMV):
            return SeriesMV(self.num_vars, self.order,
                            {e: c * other for e, c in self.coeffs.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.coeffs.items():
            d1 = sum(e1)
            for e2, c2 in other.coeffs.items():
                if d1 + sum(e2) > self.order:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SeriesMV(self.num_vars, self.order, out)

    __rmul__ = __mul__

    def __pow__(self, p):
        out = SeriesMV.constant(self.num_vars, self.order)
        for _ in range(p):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, SeriesMV):
            return NotImplemented
        return (self.num_vars, self.order, self.coeffs) == (
            other.num_vars, other.order, other.coeffs)

    def coefficient(self, exp):
        exp = tuple(exp)
        if len(exp) != self.num_vars:
            raise ValueError(f"exponent {exp} has wrong length")
        if sum(exp) > self.order:
            raise SeriesTruncationError(
                f"total degree {sum(exp)} exceeds truncation order {self.order}")
        return self.coeffs.get(exp, Rat(0))

    def exp(self):
        """exp(self) for a series with zero constant term, as sum q^i/i!."""
        if self.coeffs.get((0,) * self.num_vars):
            raise ValueError("exp needs a series with zero constant term")
        out = SeriesMV.constant(self.num_vars, self.order)
        term = SeriesMV.constant(self.num_vars, self.order)
        # q has no constant term, so q^i starts at degree i
        for i in range(1, self.order + 1):
            term = term * self * Rat(1, i)
            if not term.coeffs:
                break
            out = out + term
        return out

    def __repr__(self):
        return f"SeriesMV({self.num_vars}, {self.order}, {len(self.coeffs)} terms)"


def quadratic_form(num_factors, order):
    """Exponent of the integrated product of generating functions.

    1: -r^2/2;  2: -(r-s)^2/2;  3: -(r-s-t)^2/2 + 2st;
    4: -(r-s-t-u)^2/2 + 2(st+su+tu).
    """
    v = [SeriesMV.variable(num_factors, order, i) for i in range(num_factors)]
    lin = v[0]
    for x in v[1:]:
        lin = lin - x
    q = lin * lin * Rat(-1, 2)
    rest = v[1:]
    cross = SeriesMV(num_factors, order)
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            cross = cross + rest[i] * rest[j]
    if num_factors >= 3:
        q = q + cross * 2
    return q


def gf_rhs(num_factors, order):
    if not 1 <= num_factors <= 4:
        raise ValueError("num_factors must be between 1 and 4")
    return quadratic_form(num_factors, order).exp()


def gf_coefficient_H(indices, series):
    """prod(index!) times the series coefficient at ``indices``."""
    c = series.coefficient(indices)
    return c * math.prod(math.factorial(i) for i in indices)


def exponent_tuples(num_vars, max_degree):
    for exp in product(range(max_degree + 1), repeat=num_vars):
        if sum(exp) <= max_degree:
            yield exp
