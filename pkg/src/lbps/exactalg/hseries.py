"""Truncated power series in h with exact rational coefficients."""

from fractions import Fraction
from math import factorial


class HSeries:
    """sum_{k < order} c_k h^k, known exactly below ``order``.

    The valuation may be negative (a Laurent tail at h = 0); ``order`` is the
    absolute exponent up to which coefficients are exact.
    """

    __slots__ = ("low", "coeffs", "order")

    def __init__(self, coeffs, order, low=0):
        coeffs = [Fraction(c) for c in coeffs]
        coeffs = coeffs[: max(0, order - low)]
        self.low = low
        self.coeffs = coeffs
        self.order = order

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def h(cls, order):
        return cls([1], order, low=1)

    def __getitem__(self, k):
        if k >= self.order:
            raise IndexError(f"h^{k} is beyond the truncation order {self.order}")
        i = k - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return self.low + i
        return None

    def __add__(self, other):
        if not isinstance(other, HSeries):
            other = HSeries([other], self.order)
        order = min(self.order, other.order)
        low = min(self.low, other.low)
        return HSeries([self[k] + other[k] for k in range(low, order)], order, low)

    __radd__ = __add__

    def __neg__(self):
        return HSeries([-c for c in self.coeffs], self.order, self.low)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, HSeries):
            c = Fraction(other)
            return HSeries([a * c for a in self.coeffs], self.order, self.low)
        va, vb = self.valuation(), other.valuation()
        if va is None or vb is None:
            # an exact zero only stays zero up to the partner's precision
            order = min(self.order + (vb if vb is not None else 0),
                        other.order + (va if va is not None else 0))
            return HSeries([], order, 0)
        order = min(self.order + vb, other.order + va)
        low = va + vb
        out = [Fraction(0)] * max(0, order - low)
        top_a = min(self.order, self.low + len(self.coeffs))
        top_b = min(other.order, other.low + len(other.coeffs))
        for i in range(va, top_a):
            a = self.coeffs[i - self.low]
            if not a:
                continue
            for j in range(vb, min(top_b, order - i)):
                out[i + j - low] += a * other.coeffs[j - other.low]
        return HSeries(out, order, low)

    __rmul__ = __mul__

    def inverse(self):
        v = self.valuation()
        if v is None:
            raise ZeroDivisionError("inverse of zero series")
        rel = self.order - v
        a = [self[v + i] for i in range(rel)]
        inv = [Fraction(0)] * rel
        inv[0] = 1 / a[0]
        for n in range(1, rel):
            inv[n] = -sum(a[i] * inv[n - i] for i in range(1, n + 1)) / a[0]
        return HSeries(inv, rel - v, -v)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        base = self
        result = HSeries([1], 10**9)
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __repr__(self):
        terms = [f"{c}*h^{self.low + i}" for i, c in enumerate(self.coeffs) if c]
        return "HSeries(" + " + ".join(terms) + f" + O(h^{self.order}))"


def sin_ratio(order):
    """u(h) = 2 sin(h/2) / h = 1 - h^2/24 + h^4/1920 - ..., exact to h^order."""
    coeffs = [Fraction(0)] * order
    for k in range(0, (order + 1) // 2):
        if 2 * k < order:
            coeffs[2 * k] = Fraction((-1) ** k, 4**k * factorial(2 * k + 1))
    return HSeries(coeffs, order)


def two_sin_half(order):
    """s(h) = 2 sin(h/2), exact to h^order."""
    return HSeries.h(order) * sin_ratio(order)
