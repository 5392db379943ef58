"""Harder-Narasimhan counting over finite fields.

Counts are polynomials in q.  With A_e = |R_e^{sst}(F_q)| the recursion is

    A_e = q^{sum a_ij e_i e_j} - sum_{d1} w(e, d1) A_{d1} H(e - d1, mu(d1))
    H(e, mu) = sum_{d1, mu(d1) < mu} w(e, d1) A_{d1} H(e - d1, mu(d1)),  H(0, .) = 1
    w(e, d1) = prod_i [e_i choose d1_i]_q * q^{sum_{i->j} a_ij (e - d1)_i d1_j}

where the first sum runs over proper first pieces with mu(d1) > mu(e).  This
is the stack-count HN identity multiplied through by |G_e|, so every quantity
is an integer polynomial.  Vertices of dimension one with identical arrows
and weights are merged into blocks (binomial multiplicities replace the
Gaussian ones).

Evaluation is exact at a large integer q0 and decoded in balanced base q0;
the base is chosen from a rigorous coefficient bound obtained by running the
same recursion on majorants at q = 1.
"""

import threading
from fractions import Fraction
from itertools import product
from math import comb

from ..errors import BudgetExceeded, InexactDivision, NotCoprime
from ..exactalg.laurent import Laurent, RationalFunction
from .quiver import Stability, euler_form, is_coprime

DEFAULT_BUDGET = 5_000_000


class _Blocks:
    """Compressed description of (Q, d, theta)."""

    def __init__(self, Q, d, theta, compress=True):
        n = len(Q)
        groups = []
        sig_index = {}
        for v in range(n):
            if compress and d[v] == 1:
                sig = (tuple(Q.a[v]), tuple(Q.a[u][v] for u in range(n)), theta[v])
                if sig in sig_index:
                    groups[sig_index[sig]].append(v)
                    continue
                sig_index[sig] = len(groups)
            groups.append([v])
        self.groups = groups
        self.block = [len(g) > 1 or (d[g[0]] == 1 and compress) for g in groups]
        self.cap = tuple(len(g) if b else d[g[0]] for g, b in zip(groups, self.block))
        self.theta = tuple(theta[g[0]] for g in groups)
        self.arrows = [
            (c, c2, Q.a[g[0]][g2[0]])
            for c, g in enumerate(groups)
            for c2, g2 in enumerate(groups)
            if Q.a[g[0]][g2[0]]
        ]

    def th(self, e):
        return sum(t * x for t, x in zip(self.theta, e))


class _IntRing:
    """Integers obtained by evaluating at q = q0 (or majorants at q = 1)."""

    def __init__(self, q0, majorant=False):
        self.q0 = q0
        self.majorant = majorant
        self._gauss = {}
        self._pow = {}

    def qpow(self, k):
        if self.majorant:
            return 1
        v = self._pow.get(k)
        if v is None:
            v = self._pow[k] = self.q0 ** k
        return v

    def sub(self, a, b):
        return a + b if self.majorant else a - b

    def gauss(self, n, k):
        if k < 0 or k > n:
            return 0
        if self.majorant:
            return comb(n, k)
        key = (n, k)
        v = self._gauss.get(key)
        if v is None:
            if k == 0 or k == n:
                v = 1
            else:
                v = self.gauss(n - 1, k - 1) + self.qpow(k) * self.gauss(n - 1, k)
            self._gauss[key] = v
        return v


class HNEngine:
    def __init__(self, Q, d, theta, ring, compress=True, budget=DEFAULT_BUDGET):
        self.B = _Blocks(Q, d, theta, compress)
        self.ring = ring
        self.A = {}
        self.H = {}
        self.budget = budget
        self.steps = 0
        self._subs = {}

    def _tick(self):
        self.steps += 1
        if self.budget is not None and self.steps > self.budget:
            raise BudgetExceeded(f"HN recursion exceeded the budget of {self.budget} steps")

    def subs(self, e):
        s = self._subs.get(e)
        if s is None:
            s = [t for t in product(*(range(x + 1) for x in e)) if any(t)]
            self._subs[e] = s
        return s

    def weight(self, e, d1):
        B, R = self.B, self.ring
        w = 1
        for c, (x, y) in enumerate(zip(e, d1)):
            if B.block[c]:
                w *= comb(x, y)
            else:
                w *= R.gauss(x, y)
        expo = sum(m * (e[i] - d1[i]) * d1[j] for i, j, m in B.arrows)
        return w * R.qpow(expo)

    def sst(self, e):
        e = tuple(e)
        v = self.A.get(e)
        if v is not None:
            return v
        B, R = self.B, self.ring
        total = R.qpow(sum(m * e[i] * e[j] for i, j, m in B.arrows))
        te, ne = B.th(e), sum(e)
        acc = 0
        for d1 in self.subs(e):
            if d1 == e:
                continue
            self._tick()
            t1, n1 = B.th(d1), sum(d1)
            if t1 * ne <= te * n1:  # need mu(d1) > mu(e)
                continue
            rest = tuple(x - y for x, y in zip(e, d1))
            h = self.hn_below(rest, Fraction(t1, n1))
            if h:
                acc += self.weight(e, d1) * self.sst(d1) * h
        v = R.sub(total, acc)
        self.A[e] = v
        return v

    def hn_below(self, e, mu):
        """Sum over HN types of e with every slope strictly below mu (times |G_e|)."""
        if not any(e):
            return 1
        B = self.B
        te, ne = B.th(e), sum(e)
        if Fraction(te, ne) >= mu:
            return 0
        key = (e, mu)
        v = self.H.get(key)
        if v is not None:
            return v
        acc = 0
        for d1 in self.subs(e):
            self._tick()
            t1, n1 = B.th(d1), sum(d1)
            m1 = Fraction(t1, n1)
            if m1 >= mu or t1 * ne < te * n1:
                continue
            rest = tuple(x - y for x, y in zip(e, d1))
            h = self.hn_below(rest, m1)
            if h:
                acc += self.weight(e, d1) * self.sst(d1) * h
        self.H[key] = acc
        return acc


def _decode(value, base):
    """Balanced base-`base` digits of an integer (low to high)."""
    digits = []
    half = base // 2
    while value:
        r = value % base
        if r > half:
            r -= base
        digits.append(r)
        value = (value - r) // base
    return digits


def _gl_poly(n):
    q = Laurent({1: 1}, var="q")
    out = Laurent({0: 1}, var="q")
    for k in range(n):
        out = out * (q ** n - q ** k)
    return out


def group_order_poly(Q, d, compress=True):
    """|G_d(F_q)| as a polynomial in q."""
    out = Laurent({0: 1}, var="q")
    for x in d:
        out = out * _gl_poly(x)
    return out


def _sst_poly(Q, d, theta, compress=True, budget=DEFAULT_BUDGET):
    """A_d = |R_d^{sst}(F_q)| as an integer polynomial, rigorously decoded."""
    d = tuple(d)
    theta = Stability(theta)
    top = _blocks_index(Q, d, theta, compress)
    bound_engine = HNEngine(Q, d, theta, _IntRing(1, majorant=True), compress, budget)
    bound = bound_engine.sst(top)
    q0 = 1 << (max(bound, 1).bit_length() + 2)
    engine = HNEngine(Q, d, theta, _IntRing(q0), compress, budget)
    val = engine.sst(top)
    return Laurent.from_list(_decode(val, q0), var="q")


def _blocks_index(Q, d, theta, compress):
    B = _Blocks(Q, d, theta, compress)
    return tuple(B.cap)


_CACHE = {}
_CACHE_LOCK = threading.Lock()


def clear_cache():
    with _CACHE_LOCK:
        _CACHE.clear()


def sst_count(Q, d, theta, compress=True, budget=DEFAULT_BUDGET):
    """|R_d^{theta-sst}(F_q)| as a polynomial in q (memoised per quiver, vector and weights).

    A cache hit costs no recursion steps, so the budget only limits new work.
    """
    Q.check(d)
    if not any(d):
        return Laurent({0: 1}, var="q")
    key = (Q, tuple(d), tuple(theta), compress)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    val = _sst_poly(Q, d, theta, compress, budget)
    with _CACHE_LOCK:
        _CACHE.setdefault(key, val)
    return val


def hn_counting(Q, d, theta, compress=True, budget=DEFAULT_BUDGET):
    """S_d = |R_d^{sst}| / |G_d| as a reduced rational function of q."""
    num = sst_count(Q, d, theta, compress, budget)
    return RationalFunction(num, group_order_poly(Q, d))


def moduli_count(Q, d, theta, compress=True, budget=DEFAULT_BUDGET, check_coprime=True):
    """Point count (q-1) S_d of the stable moduli, as an integer polynomial in q."""
    Q.check(d)
    theta = Stability(theta)
    if check_coprime and not is_coprime(theta, d):
        raise NotCoprime(f"dimension vector {tuple(d)} is not theta-coprime")
    num = sst_count(Q, d, theta, compress, budget)
    q = Laurent({1: 1}, var="q")
    try:
        p = (num * (q - 1)).exact_div(group_order_poly(Q, d))
    except InexactDivision:
        raise InexactDivision("(q-1) S_d is not a polynomial; HN recursion is inconsistent") from None
    if not p.is_integral():
        raise InexactDivision("non-integral point count")
    return p


def expected_dimension(Q, d):
    return 1 - euler_form(Q, d, d)
