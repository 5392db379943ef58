"""Refined DT invariants as Laurent polynomials in v = -q^{1/2}."""

from fractions import Fraction

from ..errors import AsymmetricEulerRestriction, InexactDivision, NotCoprime, UnsupportedOracle
from ..exactalg.laurent import Laurent
from .hn import DEFAULT_BUDGET, moduli_count, sst_count
from .plethysm import XAndV, MultiSeries, plethystic_log
from .quiver import Stability, euler_form, is_coprime, sub_vectors


class DtInvariant:
    """Integer Laurent polynomial in v, palindromic under v <-> 1/v."""

    __slots__ = ("poly",)

    def __init__(self, poly):
        if not isinstance(poly, Laurent):
            poly = Laurent.const(poly, var="v")
        self.poly = poly.with_var("v")

    @classmethod
    def from_betti(cls, p, dim):
        """v^{-dim} p(v^2) for a point-count polynomial p(q)."""
        return cls(p.with_var("v").adams(2).shift(-dim))

    def is_zero(self):
        return self.poly.is_zero()

    def is_palindromic(self):
        return self.poly.is_palindromic(0)

    def in_q(self):
        """Laurent polynomial in q when only even powers of v occur (v^2 = q)."""
        if any(e % 2 for e, _ in self.poly.items()):
            raise InexactDivision("odd powers of v have no expression in integral powers of q")
        return Laurent({e // 2: c for e, c in self.poly.items()}, var="q")

    def __eq__(self, other):
        if isinstance(other, DtInvariant):
            return self.poly == other.poly
        if isinstance(other, (Laurent, int)):
            return self.poly == other
        return NotImplemented

    def __hash__(self):
        return hash(self.poly)

    def __mul__(self, other):
        other = other.poly if isinstance(other, DtInvariant) else other
        return DtInvariant(self.poly * other)

    __rmul__ = __mul__

    def __neg__(self):
        return DtInvariant(-self.poly)

    def __repr__(self):
        return f"DtInvariant({self.poly.to_str()})"

    def to_str(self):
        return self.poly.to_str()


def projective_space_poly(k):
    """P_{P^{k-1}} = v^{k-1} + v^{k-3} + ... + v^{1-k}; zero for k = 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return Laurent({k - 1 - 2 * i: 1 for i in range(k)}, var="v")


def dt_invariant(Q, d, theta, budget=DEFAULT_BUDGET):
    """Omega(v) = v^{-D} p(v^2) for theta-coprime d, D = 1 - <d,d>."""
    theta = Stability(theta)
    if not is_coprime(theta, d):
        raise NotCoprime(f"dimension vector {tuple(d)} is not theta-coprime; point counts do not give IC")
    p = moduli_count(Q, d, theta, budget=budget, check_coprime=False)
    if p.is_zero():
        return DtInvariant(0)
    return DtInvariant.from_betti(p, 1 - euler_form(Q, d, d))


def ray_vectors(theta, box):
    """Nonzero vectors e <= box with theta(e) = 0, sorted."""
    return sorted(e for e in sub_vectors(box) if any(e) and theta(e) == 0)


def _phi(j):
    return Laurent({2 * j: 1, 0: -1}, var="t")


class _CycloFraction:
    """num / prod_j (t^(2j) - 1)^den[j].

    Stack counts only have such denominators and the Adams operations map
    t^(2j) - 1 to t^(2jk) - 1, so sums and products can use a common multiple
    instead of gcds; the single exact division happens at the end.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=()):
        self.num = num if isinstance(num, Laurent) else Laurent.const(num, var="t")
        self.den = tuple(sorted((j, a) for j, a in dict(den).items() if a))

    def _lift(self, den):
        """Numerator over the larger denominator ``den`` (a dict)."""
        mine = dict(self.den)
        out = self.num
        for j, a in den.items():
            extra = a - mine.get(j, 0)
            if extra:
                out = out * _phi(j) ** extra
        return out

    def _coerce(self, other):
        if isinstance(other, _CycloFraction):
            return other
        if isinstance(other, (Laurent, int, Fraction)):
            return _CycloFraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        den = dict(self.den)
        for j, a in other.den:
            den[j] = max(den.get(j, 0), a)
        return _CycloFraction(self._lift(den) + other._lift(den), den)

    __radd__ = __add__

    def __neg__(self):
        return _CycloFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return _CycloFraction(self.num * other, self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        den = dict(self.den)
        for j, a in other.den:
            den[j] = den.get(j, 0) + a
        return _CycloFraction(self.num * other.num, den)

    __rmul__ = __mul__

    def adams(self, k):
        return _CycloFraction(self.num.adams(k), {j * k: a for j, a in self.den})

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        den = dict(self.den)
        for j, a in other.den:
            den[j] = max(den.get(j, 0), a)
        return self._lift(den) == other._lift(den)

    __hash__ = None

    def to_laurent(self):
        out = self.num
        for j, a in self.den:
            for _ in range(a):
                out = out.exact_div(_phi(j))
        return out


def _stack_term(Q, e, theta, budget):
    """(-t)^<e,e> |R_e^sst| / |G_e| with q = t^2."""
    chi = euler_form(Q, e, e)
    num = sst_count(Q, e, theta, budget=budget).adams(2).with_var("t")
    # |GL_n| = q^(n(n-1)/2) prod_{j<=n} (q^j - 1)
    shift = chi - sum(x * (x - 1) for x in e)
    den = {}
    for x in e:
        for j in range(1, x + 1):
            den[j] = den.get(j, 0) + 1
    return _CycloFraction(num * Laurent({shift: (-1) ** (chi % 2)}, var="t"), den)


def stack_dt_invariants(Q, theta, box, budget=DEFAULT_BUDGET):
    """DT invariants of every ray vector under ``box`` from the semistable stack series.

    With t = q^{1/2} and the Euler form symmetric on the ray,
    sum_e (-t)^{<e,e>} |R_e^sst|/|G_e| x^e = Exp(sum_e Omega_e x^e / (t^{-1} - t))
    where the Adams operations send t to t^k.  Omega is returned in v = -t.
    """
    theta = Stability(theta)
    box = tuple(box)
    vecs = ray_vectors(theta, box)
    for a in vecs:
        for b in vecs:
            if euler_form(Q, a, b) != euler_form(Q, b, a):
                raise AsymmetricEulerRestriction("Euler form is not symmetric on the ray")
    terms = {(0,) * len(box): _CycloFraction(1)}
    for e in vecs:
        terms[e] = _stack_term(Q, e, theta, budget)
    F = MultiSeries(terms, len(box), box, var="t")
    L = plethystic_log(F, XAndV)
    denom = Laurent({-1: 1, 1: -1}, var="t")
    out = {}
    for e in vecs:
        c = L[e]
        try:
            poly = (c * denom).to_laurent() if isinstance(c, _CycloFraction) else c * denom
        except InexactDivision:
            raise UnsupportedOracle(f"DT invariant at {e} is not a Laurent polynomial") from None
        if not poly.is_integral():
            raise UnsupportedOracle(f"non-integral DT invariant at {e}")
        # t = -v
        out[e] = DtInvariant(Laurent({k: c * (-1) ** (k % 2) for k, c in poly.items()}, var="v"))
    return out


def stack_dt_invariant(Q, d, theta, budget=DEFAULT_BUDGET):
    return stack_dt_invariants(Q, theta, d, budget)[tuple(d)]


__all__ = [
    "DtInvariant", "projective_space_poly", "dt_invariant", "ray_vectors",
    "stack_dt_invariants", "stack_dt_invariant",
]
