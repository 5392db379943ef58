"""The S-variable representation of BPS generating series.

Throughout, ``s = 2 sin(h/2)`` and ``S = s**2 = 2 - q - 1/q``.  With the
branch ``y = (-q)**(1/2)`` (so ``q = -y**2``) one has ``s = -(y + 1/y)``,
and ``S = (y + 1/y)**2``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .hseries import sin_ratio
from .laurent import InexactDivision, Laurent


class NotInSImage(ValueError):
    """A Laurent polynomial that is not s^offset times an integer polynomial in S."""


class SPoly:
    """Integer polynomial c_0 + c_1 S + ... + c_g S^g (trailing zeros trimmed)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, a):
        return cls((a,))

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, g):
        return self.coeffs[g] if 0 <= g < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        other = _as_spoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return SPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_spoly(other))

    def __rsub__(self, other):
        return _as_spoly(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return SPoly(a * other for a in self.coeffs)
        other = _as_spoly(other)
        if not self.coeffs or not other.coeffs:
            return SPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return SPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = SPoly((1,))
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, S):
        total = 0
        for a in reversed(self.coeffs):
            total = total * S + a
        return total

    def __eq__(self, other):
        if isinstance(other, SPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == SPoly(other).coeffs
        if isinstance(other, int):
            return self.coeffs == SPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"SPoly({list(self.coeffs)})"


def _as_spoly(x):
    if isinstance(x, SPoly):
        return x
    if isinstance(x, int):
        return SPoly((x,))
    return SPoly(x)


@dataclass(frozen=True)
class BpsPolynomial:
    """F = s^offset * sum_g n_g S^g, where n_g are the BPS invariants."""

    offset: int
    poly: SPoly

    def __post_init__(self):
        if not isinstance(self.poly, SPoly):
            object.__setattr__(self, "poly", SPoly(self.poly))

    @property
    def bps(self):
        return list(self.poly.coeffs)

    def is_zero(self):
        return self.poly.is_zero()

    def __repr__(self):
        return f"BpsPolynomial({self.offset}, {list(self.poly.coeffs)})"


@lru_cache(maxsize=None)
def chebyshev_c(k):
    """c_k(S) with q^k + q^-k - 2 = -S c_k(S); equals the quantum integer [k]^2."""
    if k < 0:
        raise ValueError("k must be non-negative")
    two_minus_S = SPoly((2, -1))
    prev, cur = SPoly(), SPoly((1,))
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, 2 + two_minus_S * cur - prev
    return cur


def quantum_integer_squared(k):
    """[k]^2 as a polynomial in S; the square of the shifted Poincare polynomial of P^(k-1)."""
    if k < 1:
        raise ValueError("k must be positive")
    return chebyshev_c(k)


# ---------------------------------------------------------------------------
# SymLaurent: Laurent polynomials in y, localised at s = -(y + 1/y)

_W = Laurent({1: 1, -1: 1}, var="y")  # y + 1/y = -s
_W_POLY = Laurent({2: 1, 0: 1}, var="y")  # y^2 + 1 = y * (y + 1/y)


class SymLaurent:
    """num / (y + 1/y)^pole with num a Laurent polynomial in y = (-q)^(1/2).

    ``pole`` is minimal: when positive, ``num`` is not divisible by y + 1/y.
    Only the Gamma.beta = 1 series (one factor 1/s) need a positive pole.
    """

    __slots__ = ("num", "pole")

    def __init__(self, num=None, pole=0):
        if num is None:
            num = Laurent(var="y")
        elif not isinstance(num, Laurent):
            num = Laurent(num, var="y")
        else:
            num = num.with_var("y")
        if pole < 0:
            num = num * _W ** (-pole)
            pole = 0
        while pole > 0 and num:
            try:
                num = num.exact_div(_W)
            except InexactDivision:
                break
            pole -= 1
        if not num:
            pole = 0
        self.num = num
        self.pole = pole

    @classmethod
    def const(cls, a):
        return cls(Laurent({0: a}, var="y"))

    @classmethod
    def y(cls):
        return cls(Laurent({1: 1}, var="y"))

    @classmethod
    def q(cls):
        return cls(Laurent({2: -1}, var="y"))

    @property
    def y_coeffs(self):
        if self.pole:
            raise InexactDivision("series has a pole along s; no y-coefficients")
        return self.num.coeffs

    def is_laurent(self):
        return self.pole == 0

    def _lift(self, pole):
        return self.num * _W ** (pole - self.pole)

    def __add__(self, other):
        other = _as_sym(other)
        p = max(self.pole, other.pole)
        return SymLaurent(self._lift(p) + other._lift(p), p)

    __radd__ = __add__

    def __neg__(self):
        return SymLaurent(-self.num, self.pole)

    def __sub__(self, other):
        return self + (-_as_sym(other))

    def __rsub__(self, other):
        return _as_sym(other) - self

    def __mul__(self, other):
        other = _as_sym(other)
        return SymLaurent(self.num * other.num, self.pole + other.pole)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_sym(other)
        if not other.num:
            raise ZeroDivisionError("division by zero")
        den = other.num
        k = 0
        while True:
            try:
                den2 = den.exact_div(_W)
            except InexactDivision:
                break
            den, k = den2, k + 1
        num = self.num * _W ** other.pole
        try:
            return SymLaurent(num.exact_div(den), self.pole + k)
        except InexactDivision:
            raise InexactDivision("division leaves a remainder") from None

    def __rtruediv__(self, other):
        return _as_sym(other) / self

    def __pow__(self, n):
        if n < 0:
            return SymLaurent.const(1) / (self ** (-n))
        out = SymLaurent.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymLaurent.const(other)
        if not isinstance(other, SymLaurent):
            return NotImplemented
        return self.pole == other.pole and self.num == other.num

    def __hash__(self):
        return hash((self.num, self.pole))

    def __repr__(self):
        from .qparse import format_sym

        return f"SymLaurent({format_sym(self)})"

    def to_json(self):
        out = {"y_coeffs": {str(e): str(a) for e, a in self.num.items()}}
        if self.pole:
            out["s_pole"] = self.pole
        return out

    @classmethod
    def from_json(cls, obj):
        num = Laurent({int(e): Fraction(a) for e, a in obj["y_coeffs"].items()}, var="y")
        return cls(num, obj.get("s_pole", 0))


def _as_sym(x):
    if isinstance(x, SymLaurent):
        return x
    if isinstance(x, Laurent):
        return SymLaurent(x)
    return SymLaurent.const(x)


def _S_in_y(poly):
    """poly(S) as a Laurent polynomial in y, S = y^2 + 2 + y^-2."""
    S = _W * _W
    out = Laurent(var="y")
    for a in reversed(poly.coeffs):
        out = out * S + a
    return out


def s_form_to_laurent(f):
    """Expand s^offset * P(S) in y, with s = -(y + 1/y)."""
    body = _S_in_y(f.poly)
    sign = -1 if f.offset % 2 else 1
    if f.offset >= 0:
        return SymLaurent(body * _W**f.offset * sign)
    return SymLaurent(body * sign, -f.offset)


def laurent_to_s_form(g, offset):
    """Inverse of s_form_to_laurent for a given offset."""
    if not isinstance(g, SymLaurent):
        g = _as_sym(g)
    sign = -1 if offset % 2 else 1
    if offset >= 0:
        rest = g * sign / SymLaurent(_W**offset)
    else:
        rest = g * SymLaurent(_W ** (-offset)) * sign
    if rest.pole:
        raise NotInSImage("remaining factor has a pole along s")
    num = rest.num
    coeffs = []
    S = _W * _W
    if num:
        top, bot = num.max_degree(), num.min_degree()
        if top % 2 or top != -bot:
            raise NotInSImage("not symmetric under y <-> 1/y with even degree")
        g_max = top // 2
        coeffs = [0] * (g_max + 1)
        for k in range(g_max, -1, -1):
            c = num[2 * k]
            coeffs[k] = c
            if c:
                num = num - S**k * c
        if num:
            raise NotInSImage("not a polynomial in S")
    if any(Fraction(c).denominator != 1 for c in coeffs):
        raise NotInSImage("non-integral S coefficients")
    return BpsPolynomial(offset, SPoly(int(c) for c in coeffs))


def h_expand(f, g_max):
    """Gromov-Witten numbers N_0..N_gmax: coefficient of h^(2g+offset) in F."""
    order = 2 * g_max + 2
    u = sin_ratio(order)
    # F = h^offset * u^offset * P(h^2 u^2)
    usq_h2 = u * u
    usq_h2 = type(u)([0, 0] + list(usq_h2.coeffs), order)
    series = type(u)([0], order)
    for a in reversed(f.poly.coeffs):
        series = series * usq_h2 + type(u)([a], order)
    series = series * (u ** f.offset)
    return [series[2 * g] for g in range(g_max + 1)]


# ---------------------------------------------------------------------------
# integral q-Laurent polynomials <-> S-polynomials

def sym_from_q(p):
    """A Laurent polynomial in q as a SymLaurent (q = -y^2)."""
    return SymLaurent(Laurent({2 * e: c * (-1) ** (e % 2) for e, c in p.items()}, var="y"))


def spoly_from_q(p):
    """Write a q <-> 1/q symmetric Laurent polynomial as a polynomial in S = 2 - q - 1/q."""
    return laurent_to_s_form(sym_from_q(p), 0).poly


def spoly_to_q(poly):
    """P(S) as a Laurent polynomial in q."""
    S = Laurent({0: 2, 1: -1, -1: -1}, var="q")
    out = Laurent(var="q")
    for a in reversed(poly.coeffs):
        out = out * S + a
    return out
