"""Sparse trivariate polynomials with exact rational coefficients.

Variables are ordered (n, m, l); a monomial n^a m^b l^c is keyed by the
exponent triple (a, b, c).
"""
from itertools import permutations
import math

from .exact import Rat

PERMS = tuple(permutations(range(3)))


class Poly3:
    __slots__ = ("coeffs", "_scaled")

    def __init__(self, coeffs=None):
        out = {}
        for exp, c in (coeffs or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != 3 or min(exp) < 0:
                raise ValueError(f"bad exponent {exp}")
            out[exp] = out.get(exp, 0) + Rat(c)
        self.coeffs = {e: c for e, c in out.items() if c}
        self._scaled = None

    @classmethod
    def const(cls, c):
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, i):
        exp = [0, 0, 0]
        exp[i] = 1
        return cls({tuple(exp): 1})

    @classmethod
    def gens(cls):
        return cls.var(0), cls.var(1), cls.var(2)

    def _lift(self, other):
        return other if isinstance(other, Poly3) else Poly3.const(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Poly3(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly3({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly3):
            return Poly3({e: c * other for e, c in self.coeffs.items()})
        out = {}
        for (a1, b1, c1), x in self.coeffs.items():
            for (a2, b2, c2), y in other.coeffs.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                out[e] = out.get(e, 0) + x * y
        return Poly3(out)

    __rmul__ = __mul__

    def __pow__(self, p):
        if p < 0:
            raise ValueError("negative power")
        out, base = Poly3.const(1), self
        while p:
            if p & 1:
                out = out * base
            base = base * base
            p >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly3):
            return self.coeffs == other.coeffs
        return self.coeffs == Poly3.const(other).coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __call__(self, n, m, l):
        if not all(isinstance(v, int) for v in (n, m, l)):
            total = Rat(0)
            for (a, b, c), x in self.coeffs.items():
                total += x * Rat(n) ** a * Rat(m) ** b * Rat(l) ** c
            return total
        # integer points: evaluate with integer coefficients over a common denominator
        if self._scaled is None:
            den = 1
            for x in self.coeffs.values():
                den = den * x.denominator // math.gcd(den, x.denominator)
            terms = [(e, int(x * den)) for e, x in self.coeffs.items()]
            top = max((max(e) for e in self.coeffs), default=0)
            self._scaled = (den, terms, top)
        den, terms, top = self._scaled
        pn, pm, pl = ([v ** i for i in range(top + 1)] for v in (n, m, l))
        total = 0
        for (a, b, c), x in terms:
            total += x * pn[a] * pm[b] * pl[c]
        return Rat(total, den)

    def total_degree(self):
        """Largest a+b+c with a nonzero coefficient; -1 for the zero polynomial."""
        return max((sum(e) for e in self.coeffs), default=-1)

    def substitute(self, i, value):
        """Fix variable ``i`` to ``value``; the result no longer depends on it."""
        out = {}
        for e, c in self.coeffs.items():
            e2 = list(e)
            e2[i] = 0
            e2 = tuple(e2)
            out[e2] = out.get(e2, 0) + c * Rat(value) ** e[i]
        return Poly3(out)

    def permute(self, perm):
        """Return p(x[perm[0]], x[perm[1]], x[perm[2]])."""
        out = {}
        for e, c in self.coeffs.items():
            e2 = [0, 0, 0]
            for slot, src in enumerate(perm):
                e2[src] += e[slot]
            out[tuple(e2)] = c
        return Poly3(out)

    def is_symmetric(self):
        return all(self.permute(p) == self for p in PERMS)

    def sorted_terms(self):
        """Terms in graded order: degree ascending, then exponents descending."""
        return sorted(self.coeffs.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))

    def dumps(self):
        """Canonical text form, one ``a b c : coefficient`` line per monomial."""
        return "\n".join(f"{a} {b} {c} : {x}" for (a, b, c), x in self.sorted_terms())

    @classmethod
    def loads(cls, text):
        coeffs = {}
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            exps, _, value = line.partition(":")
            coeffs[tuple(int(t) for t in exps.split())] = Rat(value.strip())
        return cls(coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Poly3(0)"
        return f"Poly3({len(self.coeffs)} terms, degree {self.total_degree()})"


class SymPoly3(Poly3):
    """A :class:`Poly3` checked to be invariant under permuting (n, m, l)."""

    __slots__ = ()

    def __init__(self, coeffs=None):
        super().__init__(coeffs)
        if not self.is_symmetric():
            raise ValueError("polynomial is not symmetric in (n, m, l)")

    @classmethod
    def from_poly(cls, p):
        return cls(p.coeffs)


def orbit_representatives(max_degree):
    """Exponent triples a >= b >= c with a+b+c <= max_degree, graded order."""
    reps = [(a, b, d - a - b)
            for d in range(max_degree + 1)
            for a in range(d, -1, -1)
            for b in range(min(a, d - a), -1, -1)
            if 0 <= d - a - b <= b]
    return reps


def monomial_symmetric(rep):
    """Sum of the distinct monomials in the permutation orbit of ``rep``."""
    exps = {tuple(rep[p[i]] for i in range(3)) for p in PERMS}
    return Poly3({e: 1 for e in exps})
