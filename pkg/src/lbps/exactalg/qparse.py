"""Parser and printers for q-expressions such as ``(q-1)^4(q^2+5q+1)/q^3``.

Everything lands in :class:`SymLaurent` through q = -y^2 and (-q)^(1/2) = y.
"""

import re
from fractions import Fraction
from math import comb

from .laurent import InexactDivision, Laurent
from .spoly import BpsPolynomial, SPoly, SymLaurent  # noqa: F401

_TOKEN = re.compile(r"\s*(?:(\d+)|(q)|(\*\*|[-+*/^(){}]))")


def _tokenize(text):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise SyntaxError(f"unexpected character {text[pos]!r} at {pos}")
        num, sym, op = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif sym is not None:
            out.append(("q", None))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            raise SyntaxError(f"expected {want} at token {self.i}, got {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise SyntaxError("empty expression")
        val = self.expr()
        if self.i != len(self.toks):
            raise SyntaxError(f"trailing input at token {self.i}")
        return val

    def expr(self):
        sign = 1
        while self.peek() in (("op", "-"), ("op", "+")):
            if self.take()[1] == "-":
                sign = -sign
        val = self.term()
        if sign < 0:
            val = -val
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def _starts_factor(self):
        kind, v = self.peek()
        return kind in ("int", "q") or (kind == "op" and v == "(")

    def term(self):
        val = self.factor()
        while True:
            kind, v = self.peek()
            if kind == "op" and v in "*/":
                self.take()
                rhs = self.factor()
                if v == "*":
                    val = val * rhs
                else:
                    val = _divide(val, rhs)
            elif self._starts_factor():
                val = val * self.factor()
            else:
                return val

    def factor(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            return _power(base, self.exponent())
        return base

    def atom(self):
        kind, v = self.peek()
        if kind == "int":
            self.take()
            return SymLaurent.const(v)
        if kind == "q":
            self.take()
            return SymLaurent.q()
        if kind == "op" and v == "(":
            self.take()
            val = self.expr()
            self.take("op", ")")
            return val
        if kind == "op" and v == "-":
            # unary minus directly after an operator, e.g. "2*-q"
            self.take()
            return -self.factor()
        raise SyntaxError(f"unexpected token {v!r}")

    def exponent(self):
        kind, v = self.peek()
        if kind == "int":
            return Fraction(self.take()[1])
        if kind == "op" and v == "-":
            self.take()
            return -Fraction(self.take("int")[1])
        closer = {"{": "}", "(": ")"}.get(v)
        if closer is None:
            raise SyntaxError(f"bad exponent token {v!r}")
        self.take()
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        num = self.take("int")[1]
        den = 1
        if self.peek() == ("op", "/"):
            self.take()
            den = self.take("int")[1]
        self.take("op", closer)
        if den == 0:
            raise SyntaxError("zero denominator in exponent")
        return Fraction(sign * num, den)


def _divide(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        raise InexactDivision("division by zero") from None


def _power(base, e):
    if e.denominator == 1:
        return base ** int(e)
    if e.denominator != 2:
        raise SyntaxError(f"unsupported exponent {e}")
    # half-integer powers only of (-q)^j = y^(2j)
    if base.pole or len(base.num.items()) != 1:
        raise SyntaxError("half-integer power of a non-monomial")
    (k, c), = base.num.items()
    if c != 1 or k % 2:
        raise SyntaxError("half-integer powers are only defined for (-q)^j")
    return SymLaurent(Laurent({k // 2 * e.numerator: 1}, var="y"))


def parse_q_expression(text):
    """Parse a q-expression into a SymLaurent (q = -y^2, (-q)^{1/2} = y)."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# printers


def _exp(e):
    s = str(e)
    return s if len(s) == 1 else "{" + s + "}"


def _monomials(num):
    parts = []
    for a, c in sorted(num.items(), reverse=True):
        if a % 2 == 0:
            k = a // 2
            c = c * (-1) ** (k % 2)
            mono = "" if k == 0 else "q^{%d}" % k
        else:
            mono = "(-q)^{%d/2}" % a
        parts.append((c, mono))
    out = ""
    for idx, (c, mono) in enumerate(parts):
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out or "0"


def format_sym(g):
    """Canonical monomial text of a SymLaurent, decreasing powers of y."""
    if not isinstance(g, SymLaurent):
        g = SymLaurent(g)
    if not g.pole:
        return _monomials(g.num)
    body = _monomials(g.num * Laurent({g.pole: 1}, var="y"))
    den = "(1-q)" if g.pole == 1 else f"(1-q)^{_exp(g.pole)}"
    return f"({body})/{den}"


def _poly_q(coeffs):
    """Dense integer coefficients (low to high) as 'q^2+5q+1'."""
    out = ""
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = "q" if e == 1 else f"q^{_exp(e)}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += ("-" if c < 0 else "+") + body
    return out


def bps_q_parts(f):
    """Decompose s^o P(S) as sign * (q-1)^a * R(q) / y^N with R palindromic.

    Returns (sign, a, R coefficients low->high, N).
    """
    poly = list(f.poly.coeffs)
    if not poly:
        return 0, 0, [], 0
    t = 0
    while poly[t] == 0:
        t += 1
    tail = poly[t:]
    G = len(tail) - 1
    R = [0] * (2 * G + 1)
    # n_g (q-1)^{2g} (-q)^{G-g}
    for g, n in enumerate(tail):
        if not n:
            continue
        sgn = (-1) ** (G - g)
        for i in range(2 * g + 1):
            R[G - g + i] += n * sgn * comb(2 * g, i) * (-1) ** (2 * g - i)
    while R and R[-1] == 0:
        R.pop()
    a = f.offset + 2 * t
    N = a + 2 * G
    sign = 1
    if R[-1] < 0:
        sign = -1
        R = [-c for c in R]
    return sign, a, R, N


def format_bps_q(f):
    """Factored table notation, e.g. '(q-1)^4(q^2+5q+1)/q^3'."""
    sign, a, R, N = bps_q_parts(f)
    if not sign:
        return "0"
    num = ""
    if a > 0:
        num += "(q-1)" if a == 1 else f"(q-1)^{_exp(a)}"
    r_text = _poly_q(R)
    if len(R) == 1:
        if r_text != "1":
            num = r_text + num
    else:
        num += f"({r_text})"
    if N == -1:
        num = "(-q)^{1/2}" + num
        den = ""
    elif N == 0:
        den = ""
    elif N % 2 == 0:
        k = N // 2
        if k % 2:
            sign = -sign
        den = "q" if k == 1 else f"q^{_exp(k)}"
    else:
        den = "(-q)^{%d/2}" % N
    if a < 0:
        pole = "(q-1)" if a == -1 else f"(q-1)^{_exp(-a)}"
        den = f"({den}{pole})" if den else pole
    if not num:
        num = "1"
    text = num + (f"/{den}" if den else "")
    return ("-" if sign < 0 else "") + text


__all__ = [
    "parse_q_expression",
    "format_sym",
    "format_bps_q",
    "bps_q_parts",
    "BpsPolynomial",
    "SPoly",
]
