"""Memoised all-genus recursion over S-polynomials.

With F_beta = s^(G.beta - 2) P_beta(S), S = s^2 and
q^k + q^-k - 2 = -S c_k(S), the recursion for the series reads

    F_beta = sum (q^k + q^-k - 2) F_b1 F_b2 binom(G.beta - 3, G.b1 - 1),  k = D.b1.

The s-offsets of the two factors add up to G.beta - 4, and the contact
factor supplies the missing S, so dividing by s^(G.beta - 2) leaves

    P_beta = - sum c_k(S) P_b1 P_b2 binom(G.beta - 3, G.b1 - 1)

which involves integer polynomials only.  Out-of-range binomials vanish.
"""

import json
import os
import threading
from fractions import Fraction
from math import comb

from ..errors import NonPositiveGamma, NotInitial
from ..exactalg.laurent import Laurent
from ..exactalg.spoly import (
    BpsPolynomial,
    SPoly,
    SymLaurent,
    chebyshev_c,
    laurent_to_s_form,
    s_form_to_laurent,
)
from ..geometry import (
    CurveClass,
    deformation_reduce,
    intersect_D,
    intersect_Gamma,
    parse_pair,
    splits,
)
from .initial import KRONECKER2_CONVENTIONS, TABLE, initial_series

CACHE_VERSION = 1


def binom(n, k):
    """Binomial coefficient with the zero convention outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


class SeriesTable:
    """Memo of reduced (pair, class) -> BpsPolynomial.

    Reads are lock-free; insertion is serialised.  With ``cache_dir`` (or the
    LBPS_CACHE_DIR environment variable) the table can be saved to and loaded
    from a versioned JSON file.
    """

    def __init__(self, convention=TABLE, cache_dir=None, budget=None):
        if convention not in KRONECKER2_CONVENTIONS:
            raise ValueError(f"unknown convention {convention!r}")
        self.convention = convention
        self.budget = budget
        self._memo = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.computed = 0
        self.cache_dir = cache_dir if cache_dir is not None else os.environ.get("LBPS_CACHE_DIR")
        if self.cache_dir:
            self.load()

    def __len__(self):
        return len(self._memo)

    def __contains__(self, key):
        return key in self._memo

    def get(self, key):
        val = self._memo.get(key)
        if val is not None:
            self.hits += 1
        return val

    def put(self, key, value):
        with self._lock:
            # first writer wins; values are deterministic anyway
            if key not in self._memo:
                self._memo[key] = value
                self.computed += 1
            return self._memo[key]

    def clear(self):
        with self._lock:
            self._memo.clear()
            self.hits = self.computed = 0

    def stats(self):
        return {"entries": len(self._memo), "hits": self.hits, "computed": self.computed}

    # persistence
    def _path(self):
        return os.path.join(self.cache_dir, f"lbps-series-{self.convention}-v{CACHE_VERSION}.json")

    def save(self):
        if not self.cache_dir:
            return None
        os.makedirs(self.cache_dir, exist_ok=True)
        entries = {
            f"{pair}|{beta}": [val.offset, list(val.poly.coeffs)]
            for (pair, beta), val in sorted(self._memo.items(), key=lambda kv: (str(kv[0][0]), kv[0][1]))
        }
        blob = {"version": CACHE_VERSION, "convention": self.convention, "entries": entries}
        tmp = self._path() + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(blob, fh, sort_keys=True)
        os.replace(tmp, self._path())
        return self._path()

    def load(self):
        path = self._path()
        if not os.path.exists(path):
            return 0
        try:
            with open(path) as fh:
                blob = json.load(fh)
        except (OSError, ValueError):
            return 0
        if blob.get("version") != CACHE_VERSION or blob.get("convention") != self.convention:
            return 0
        n = 0
        for key, (offset, coeffs) in blob.get("entries", {}).items():
            ptext, ctext = key.split("|")
            pair = parse_pair(ptext)
            beta = CurveClass(tuple(int(x) for x in ctext.split(",")))
            self._memo.setdefault((pair, beta), BpsPolynomial(offset, SPoly(coeffs)))
            n += 1
        return n


_DEFAULT = {}
_DEFAULT_LOCK = threading.Lock()


def default_table(convention=TABLE):
    with _DEFAULT_LOCK:
        if convention not in _DEFAULT:
            _DEFAULT[convention] = SeriesTable(convention)
        return _DEFAULT[convention]


def _terms(pair, beta):
    """(b1, b2, contact order D.b1, binomial) for the splits that contribute."""
    g = intersect_Gamma(pair, beta)
    out = []
    for b1, b2 in splits(beta):
        c = binom(g - 3, intersect_Gamma(pair, b1) - 1)
        if c:
            out.append((b1, b2, intersect_D(pair, b1), c))
    return out


def compute_series(pair, beta, table=None):
    """F_beta as a BpsPolynomial (offset G.beta - 2, BPS coefficients)."""
    table = table if table is not None else default_table()
    pair, beta = deformation_reduce(pair, beta)
    g = intersect_Gamma(pair, beta)
    if g <= 0:
        raise NonPositiveGamma(f"Gamma.beta = {g} for {beta} on {pair}")
    return _compute(pair, beta, table)


def _compute(pair, beta, table):
    key = (pair, beta)
    hit = table.get(key)
    if hit is not None:
        return hit
    try:
        val = initial_series(pair, beta, table.convention, table.budget)
    except NotInitial:
        total = SPoly()
        for b1, b2, k, c in _terms(pair, beta):
            p1 = _compute(pair, b1, table).poly
            if p1.is_zero():
                continue
            p2 = _compute(pair, b2, table).poly
            if p2.is_zero():
                continue
            total = total + chebyshev_c(k) * p1 * p2 * c
        val = BpsPolynomial(intersect_Gamma(pair, beta) - 2, -total)
    return table.put(key, val)


def compute_series_laurent(pair, beta, convention=TABLE, _memo=None):
    """Direct evaluation of the series recursion on SymLaurent values.

    Independent of the S-form bookkeeping: multiplies the y-Laurent series
    with q^k + q^-k - 2 and only converts the initial data.
    """
    pair, beta = deformation_reduce(pair, beta)
    memo = {} if _memo is None else _memo
    key = (pair, beta)
    if key in memo:
        return memo[key]
    try:
        val = s_form_to_laurent(initial_series(pair, beta, convention))
    except NotInitial:
        val = SymLaurent.const(0)
        for b1, b2, k, c in _terms(pair, beta):
            f1 = compute_series_laurent(pair, b1, convention, memo)
            f2 = compute_series_laurent(pair, b2, convention, memo)
            # q^k + q^-k - 2 with q = -y^2
            sgn = (-1) ** (k % 2)
            factor = SymLaurent(Laurent({2 * k: sgn, -2 * k: sgn, 0: -2}, var="y"))
            val = val + factor * f1 * f2 * c
    memo[key] = val
    return val


def dual_path_agrees(pair, beta, table=None):
    """S-form recursion equals the Laurent-form recursion for this class."""
    table = table if table is not None else default_table()
    f = compute_series(pair, beta, table)
    lau = compute_series_laurent(pair, beta, table.convention)
    return laurent_to_s_form(lau, f.offset) == f


def genus0(pair, beta, convention=TABLE, _memo=None):
    """N_{0,beta} from the genus-0 recursion N = -sum (D.b1)^2 N_b1 N_b2 binom(...)."""
    pair, beta = deformation_reduce(pair, beta)
    g = intersect_Gamma(pair, beta)
    if g <= 0:
        raise NonPositiveGamma(f"Gamma.beta = {g} for {beta} on {pair}")
    memo = {} if _memo is None else _memo
    key = (pair, beta)
    if key in memo:
        return memo[key]
    try:
        init = initial_series(pair, beta, convention)
        val = Fraction(init.poly[0])
    except NotInitial:
        val = Fraction(0)
        for b1, b2, k, c in _terms(pair, beta):
            val -= k * k * genus0(pair, b1, convention, memo) * genus0(pair, b2, convention, memo) * c
    memo[key] = val
    return val
