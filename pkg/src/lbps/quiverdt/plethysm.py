"""Truncated multivariate series with Laurent coefficients, and plethystic Exp/Log."""

from fractions import Fraction
from math import factorial

from ..errors import NonzeroConstantTerm
from ..exactalg.laurent import Laurent

XOnly = "XOnly"
XAndV = "XAndV"
ADAMS_MODES = (XOnly, XAndV)


def _mobius(n):
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    return -out if n > 1 else out


class MultiSeries:
    """Series in x_1..x_r with coefficients Laurent in v.

    ``bound`` is either an int (keep total degree <= bound) or a tuple
    (keep exponents componentwise <= bound).  Both are downward closed, so
    products can be truncated term by term.
    """

    def __init__(self, terms, nvars, bound, var="v"):
        self.nvars = nvars
        self.bound = bound
        self.var = var
        t = {}
        for e, c in dict(terms).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError("exponent length does not match the number of variables")
            if isinstance(c, (int, Fraction)):
                c = Laurent.const(c, var=var)
            if c and self.keeps(e):
                t[e] = c
        self.terms = t

    def keeps(self, e):
        if isinstance(self.bound, int):
            return sum(e) <= self.bound
        return all(a <= b for a, b in zip(e, self.bound))

    def _like(self, terms):
        return MultiSeries(terms, self.nvars, self.bound, self.var)

    @classmethod
    def one(cls, nvars, bound, var="v"):
        return cls({(0,) * nvars: 1}, nvars, bound, var)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Laurent(var=self.var))

    def __getitem__(self, e):
        return self.terms.get(tuple(e), Laurent(var=self.var))

    def __add__(self, other):
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t[e] + c if e in t else c
        return self._like(t)

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a):
        return self._like({e: c * a for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiSeries):
            return self.scale(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if not self.keeps(e):
                    continue
                t[e] = t[e] + c1 * c2 if e in t else c1 * c2
        return self._like(t)

    __rmul__ = scale

    def adams(self, k, mode=XAndV):
        t = {}
        for e, c in self.terms.items():
            e2 = tuple(k * a for a in e)
            if self.keeps(e2):
                t[e2] = c.adams(k) if mode == XAndV else c
        return self._like(t)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, MultiSeries) and self.terms == other.terms

    def __repr__(self):
        body = ", ".join(f"{e}: {c.to_str()}" for e, c in sorted(self.terms.items()))
        return f"MultiSeries({{{body}}})"

    def max_adams(self):
        """Largest k for which psi_k of a nonconstant term can survive truncation."""
        if isinstance(self.bound, int):
            return max(self.bound, 1)
        return max(max(self.bound), 1)


def _exp(g):
    out = MultiSeries.one(g.nvars, g.bound, g.var)
    power = out
    n = 1
    while True:
        power = power * g
        if power.is_zero():
            return out
        out = out + power.scale(Fraction(1, factorial(n)))
        n += 1


def _log1p(h):
    out = h._like({})
    power = MultiSeries.one(h.nvars, h.bound, h.var)
    n = 1
    while True:
        power = power * h
        if power.is_zero():
            return out
        out = out + power.scale(Fraction((-1) ** (n + 1), n))
        n += 1


def plethystic_exp(f, adams=XAndV):
    """Exp(f) = exp(sum_k psi_k(f)/k), truncated to f's bound."""
    if f.constant_term():
        raise NonzeroConstantTerm("plethystic exponential needs a series without constant term")
    g = f._like({})
    for k in range(1, f.max_adams() + 1):
        g = g + f.adams(k, adams).scale(Fraction(1, k))
    return _exp(g)


def plethystic_log(F, adams=XAndV):
    """Inverse of plethystic_exp; F must have constant term 1."""
    if F.constant_term() != 1:
        raise NonzeroConstantTerm("plethystic logarithm needs constant term 1")
    h = F - MultiSeries.one(F.nvars, F.bound, F.var)
    lg = _log1p(h)
    out = F._like({})
    for k in range(1, F.max_adams() + 1):
        mu = _mobius(k)
        if mu:
            out = out + lg.adams(k, adams).scale(Fraction(mu, k))
    return out
