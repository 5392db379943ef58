"""Genus-zero relative invariants with maximal contact, by their own WDVV recursion.

Seeds come from the local initial data through N^{X/D} = (-1)^{D.beta - 1} (D.beta) N^{loc}.
For G.beta >= 3 the Gamma.D = 2 form

    N_beta / d = sum d1^2 binom(G.beta - 3, G.b1 - 1) (N_b1 / d1) (N_b2 / d2)

is used; fw_relative_recursion keeps an arbitrary divisor H instead.
"""

from fractions import Fraction

from ..errors import NonPositiveGamma, NotInitial
from ..geometry import deformation_reduce, intersect_D, intersect_Gamma, splits
from ..gwrec.engine import binom
from ..gwrec.initial import TABLE, initial_series


def _seed(pair, beta, convention):
    init = initial_series(pair, beta, convention)
    k = intersect_D(pair, beta)
    return (-1) ** ((k - 1) % 2) * k * Fraction(init.poly[0])


def relative_genus0(pair, beta, convention=TABLE, _memo=None):
    """N^{X/D}_{0,beta}."""
    pair, beta = deformation_reduce(pair, beta)
    g = intersect_Gamma(pair, beta)
    if g <= 0:
        return Fraction(0)
    memo = {} if _memo is None else _memo
    key = (pair, beta)
    if key in memo:
        return memo[key]
    try:
        val = _seed(pair, beta, convention)
    except NotInitial:
        d = intersect_D(pair, beta)
        acc = Fraction(0)
        for b1, b2 in splits(beta):
            c = binom(g - 3, intersect_Gamma(pair, b1) - 1)
            if not c:
                continue
            d1, d2 = intersect_D(pair, b1), intersect_D(pair, b2)
            n1 = relative_genus0(pair, b1, convention, memo)
            n2 = relative_genus0(pair, b2, convention, memo)
            acc += d1 * d1 * c * (n1 / d1) * (n2 / d2)
        val = acc * d
    memo[key] = val
    return val


def relative_genus0_recursion(pair, beta, convention=TABLE):
    """N^{X/D}_{0,beta} / (D.beta) from the recursion; requires G.beta >= 3."""
    p, b = deformation_reduce(pair, beta)
    if intersect_Gamma(p, b) < 3:
        raise NonPositiveGamma("the relative recursion needs Gamma.beta >= 3") if intersect_Gamma(p, b) <= 0 \
            else ValueError("the relative recursion needs Gamma.beta >= 3")
    return relative_genus0(p, b, convention) / intersect_D(p, b)


def fw_relative_recursion(pair, beta, H_dot_D, H_dot, convention=TABLE):
    """The general form with a divisor H (given by H.D and beta -> H.beta).

    (H.D) N_beta / d = sum [d1^2 (H.b2) C(G-3, G1-1) + d1 d2 (H.b2) C(G-3, G1-2)
                           - d1^2 (H.b1) C(G-3, G1) - d1 d2 (H.b1) C(G-3, G1-1)] (N1/d1)(N2/d2)
    with lower terms taken from relative_genus0.  Classes with G.b <= 0 are
    treated as zero, so for a general H this is only complete on P^2, where
    no such classes exist; with H = Gamma their weights vanish anyway.
    """
    pair, beta = deformation_reduce(pair, beta)
    g = intersect_Gamma(pair, beta)
    d = intersect_D(pair, beta)
    acc = Fraction(0)
    for b1, b2 in splits(beta):
        g1 = intersect_Gamma(pair, b1)
        d1, d2 = intersect_D(pair, b1), intersect_D(pair, b2)
        if d1 <= 0 or d2 <= 0:
            continue
        h1, h2 = H_dot(b1), H_dot(b2)
        w = (d1 * d1 * h2 * binom(g - 3, g1 - 1) + d1 * d2 * h2 * binom(g - 3, g1 - 2)
             - d1 * d1 * h1 * binom(g - 3, g1) - d1 * d2 * h1 * binom(g - 3, g1 - 1))
        if w:
            acc += w * (relative_genus0(pair, b1, convention) / d1) * (relative_genus0(pair, b2, convention) / d2)
    return acc * d / H_dot_D


def local_relative_agree(pair, beta, convention=TABLE):
    """Relative recursion against (-1)^{d-1} d n_0 of the local series."""
    from ..gwrec.engine import SeriesTable, compute_series

    p, b = deformation_reduce(pair, beta)
    k = intersect_D(p, b)
    n0 = compute_series(p, b, SeriesTable(convention)).poly[0]
    return relative_genus0(p, b, convention) == (-1) ** ((k - 1) % 2) * k * n0


def binomial_identity(gamma, gamma1):
    """(G - G1) C(G-3, G1-1) - G1 C(G-3, G1) == 2 C(G-3, G1-1)."""
    n = gamma - 3
    lhs = (gamma - gamma1) * binom(n, gamma1 - 1) - gamma1 * binom(n, gamma1)
    return lhs == 2 * binom(n, gamma1 - 1)


def antisymmetric_identity(pair, beta, convention=TABLE):
    """sum [(G.b2) C(G-3, G1-2) - (G.b1) C(G-3, G1-1)] N_b1 N_b2 over splits vanishes."""
    p, b = deformation_reduce(pair, beta)
    g = intersect_Gamma(p, b)
    acc = Fraction(0)
    for b1, b2 in splits(b):
        g1, g2 = intersect_Gamma(p, b1), intersect_Gamma(p, b2)
        w = g2 * binom(g - 3, g1 - 2) - g1 * binom(g - 3, g1 - 1)
        if w:
            acc += w * relative_genus0(p, b1, convention) * relative_genus0(p, b2, convention)
    return acc == 0
