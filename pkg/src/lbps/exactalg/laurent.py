"""Sparse Laurent polynomials and univariate rational functions over Q."""

from fractions import Fraction
from math import gcd, lcm
from numbers import Rational


class InexactDivision(ArithmeticError):
    pass


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class Laurent:
    """Laurent polynomial in one variable with exact rational coefficients.

    ``coeffs`` maps integer exponents to ints or Fractions; zero entries are
    never stored. Instances are immutable and hashable.
    """

    __slots__ = ("_c", "var", "_hash")

    def __init__(self, coeffs=None, var="x"):
        c = {}
        if coeffs:
            for e, a in dict(coeffs).items():
                if a:
                    c[int(e)] = _norm(a)
        self._c = c
        self.var = var
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, a, var="x"):
        return cls({0: a}, var=var)

    @classmethod
    def monomial(cls, e, a=1, var="x"):
        return cls({e: a}, var=var)

    @classmethod
    def from_list(cls, coeffs, low=0, var="x"):
        return cls({low + i: a for i, a in enumerate(coeffs)}, var=var)

    def _new(self, coeffs):
        out = object.__new__(type(self))
        out._c = coeffs
        out.var = self.var
        out._hash = None
        return out

    def _coerce(self, other):
        if isinstance(other, Laurent):
            return other
        if isinstance(other, (int, Rational)):
            return self._new({0: _norm(Fraction(other))} if other else {})
        return NotImplemented

    # inspection
    @property
    def coeffs(self):
        return dict(self._c)

    def __getitem__(self, e):
        return self._c.get(e, 0)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def max_degree(self):
        return max(self._c) if self._c else None

    def min_degree(self):
        return min(self._c) if self._c else None

    def is_integral(self):
        return all(isinstance(a, int) for a in self._c.values())

    def is_palindromic(self, center=0):
        """True when the coefficient of x^(center+k) equals that of x^(center-k)."""
        return all(self._c.get(2 * center - e, 0) == a for e, a in self._c.items())

    def to_list(self):
        """(low exponent, dense coefficient list)."""
        if not self._c:
            return 0, []
        lo, hi = self.min_degree(), self.max_degree()
        return lo, [self._c.get(e, 0) for e in range(lo, hi + 1)]

    # arithmetic
    def __neg__(self):
        return self._new({e: -a for e, a in self._c.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, a in other._c.items():
            s = c.get(e, 0) + a
            if s:
                c[e] = _norm(s)
            else:
                c.pop(e, None)
        return self._new(c)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Laurent):
            if not other:
                return self._new({})
            return self._new({e: _norm(a * other) for e, a in self._c.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + a1 * a2
        return self._new({e: _norm(a) for e, a in c.items() if a})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self._c) != 1:
                raise InexactDivision("only monomials can be inverted")
            (e, a), = self._c.items()
            return self._new({e * n: _norm(Fraction(1) / Fraction(a) ** (-n))})
        result = self._new({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Laurent):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        return self.exact_div(other)

    def exact_div(self, other):
        """Exact quotient; raises InexactDivision when the remainder is nonzero."""
        q, r = self.divmod(other)
        if r:
            raise InexactDivision(f"{other} does not divide {self}")
        return q

    def divmod(self, other):
        """Polynomial long division after clearing negative exponents."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self:
            return self._new({}), self._new({})
        lo_a, a = self.to_list()
        lo_b, b = other.to_list()
        a = [Fraction(x) for x in a]
        lead = Fraction(b[-1])
        nq = len(a) - len(b) + 1
        if nq <= 0:
            return self._new({}), self
        quot = [Fraction(0)] * nq
        for i in range(nq - 1, -1, -1):
            coef = a[i + len(b) - 1] / lead
            quot[i] = coef
            if coef:
                for j, bj in enumerate(b):
                    a[i + j] -= coef * bj
        shift = lo_a - lo_b
        q = self._new({})._add_dense(quot, shift)
        r = self._new({})._add_dense(a[: len(b) - 1], lo_a)
        return q, r

    def _add_dense(self, dense, low):
        return self._new({low + i: _norm(x) for i, x in enumerate(dense) if x})

    def shift(self, k):
        return self._new({e + k: a for e, a in self._c.items()})

    def adams(self, k):
        """Substitute x -> x^k."""
        return self._new({e * k: a for e, a in self._c.items()})

    def invert_variable(self):
        """Substitute x -> 1/x."""
        return self._new({-e: a for e, a in self._c.items()})

    def evaluate(self, x):
        total = 0
        for e, a in self._c.items():
            total += a * (Fraction(x) ** e if e < 0 else x ** e)
        return _norm(Fraction(total)) if isinstance(total, Fraction) else total

    def with_var(self, var):
        out = self._new(dict(self._c))
        out.var = var
        return out

    # comparison
    def __eq__(self, other):
        if isinstance(other, Laurent):
            return self._c == other._c
        if isinstance(other, (int, Rational)):
            return self._c == ({0: _norm(Fraction(other))} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        if not self._c:
            return f"{type(self).__name__}(0)"
        return f"{type(self).__name__}({self.to_str()})"

    def to_str(self):
        if not self._c:
            return "0"
        parts = []
        for e, a in sorted(self._c.items(), reverse=True):
            mono = "" if e == 0 else (self.var if e == 1 else f"{self.var}^{e}")
            if mono and a == 1:
                term = mono
            elif mono and a == -1:
                term = "-" + mono
            else:
                term = f"{a}*{mono}" if mono else str(a)
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


def poly_gcd(a, b):
    """Monic gcd of two Laurent polynomials viewed as polynomials (exponents >= 0)."""
    a = a.shift(-a.min_degree()) if a else a
    b = b.shift(-b.min_degree()) if b else b
    while b:
        _, r = a.divmod(b)
        a, b = b, r
    if not a:
        return a
    lead = a[a.max_degree()]
    return a * (Fraction(1) / Fraction(lead))


class RationalFunction:
    """Quotient num/den of Laurent polynomials in one variable, kept reduced.

    Normalisation: gcd(num, den) = 1 as polynomials, powers of the variable
    are moved into the numerator exponent, den has positive integer content
    with leading coefficient positive.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = num._new({0: 1})
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _reduce(num, den)

    @property
    def var(self):
        return self.num.var

    @classmethod
    def const(cls, a, var="q"):
        return cls(Laurent.const(a, var=var))

    def is_polynomial(self):
        return self.den.max_degree() == 0 and self.den.min_degree() == 0

    def to_laurent(self):
        if not self.is_polynomial():
            raise InexactDivision(f"({self.num.to_str()})/({self.den.to_str()}) is not a Laurent polynomial")
        return self.num * (Fraction(1) / Fraction(self.den[0]))

    def __add__(self, other):
        other = _as_rf(other, self)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_rf(other, self))

    def __rsub__(self, other):
        return _as_rf(other, self) - self

    def __mul__(self, other):
        other = _as_rf(other, self)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other, self)
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_rf(other, self) / self

    def __pow__(self, n):
        if n < 0:
            return RationalFunction(self.den, self.num) ** (-n)
        out = RationalFunction(self.num._new({0: 1}))
        for _ in range(n):
            out = out * self
        return out

    def adams(self, k):
        return RationalFunction(self.num.adams(k), self.den.adams(k))

    def evaluate(self, x):
        return Fraction(self.num.evaluate(x)) / Fraction(self.den.evaluate(x))

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (Laurent, int, Rational)):
            other = _as_rf(other, self)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction(({self.num.to_str()})/({self.den.to_str()}))"


def _as_rf(x, like):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Laurent):
        return RationalFunction(x)
    return RationalFunction(like.num._new({0: _norm(Fraction(x))} if x else {}))


def _reduce(num, den):
    if not num:
        return num._new({}), den._new({0: 1})
    # move monomial factors into the numerator
    k = den.min_degree()
    den = den.shift(-k)
    num = num.shift(-k)
    g = poly_gcd(num, den)
    if g.max_degree():
        num = num.exact_div(g)
        den = den.exact_div(g)
    # clear denominators / content so den is primitive integral with positive lead
    lo, dense = den.to_list()
    dens = [Fraction(c) for c in dense]
    l = 1
    for c in dens:
        l = lcm(l, c.denominator)
    ints = [int(c * l) for c in dens]
    g = 0
    for c in ints:
        g = gcd(g, c)
    scale = Fraction(l, g)
    if ints[-1] < 0:
        scale = -scale
    return num * scale, den * scale
