"""Initial series F_beta for classes with small Gamma.beta.

Everything here assumes the pair has been deformation-reduced to s = 1.
F_n with n >= 3 has no closed form; those classes go through the quiver oracle.
"""

from ..errors import NonPositiveGamma, NotInitial, UnsupportedOracle
from ..exactalg.laurent import Laurent
from ..exactalg.spoly import BpsPolynomial, SPoly, spoly_from_q, sym_from_q
from ..geometry import deformation_reduce, intersect_D, intersect_Gamma

TABLE = "table"
PLETHYSTIC = "plethystic"
KRONECKER2_CONVENTIONS = (TABLE, PLETHYSTIC)

ZERO = SPoly()


def _bps(offset, coeffs):
    return BpsPolynomial(offset, SPoly(coeffs))


def _zero(pair, beta):
    return BpsPolynomial(intersect_Gamma(pair, beta) - 2, ZERO)


def kronecker2_coefficient_q(d1, convention=TABLE):
    """Coefficient of x^(d1-1) in 1/((1-qx)(1-x/q) R(x)) as a Laurent polynomial in q.

    R(x) = 1 - 2x for the closed form printed with the tables, and
    R(x) = (1 - x)^2 for the plethystic exponential of (q + 2 + 1/q) x,
    which is what the framed 2-Kronecker moduli actually count.
    """
    if d1 < 1:
        raise ValueError("d1 must be >= 1")
    if convention not in KRONECKER2_CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    k = d1 - 1
    out = {}
    for c in range(k + 1):
        # 1/(1-2x) -> 2^c ; 1/(1-x)^2 -> c+1
        w = 2 ** c if convention == TABLE else c + 1
        rest = k - c
        for a in range(rest + 1):
            e = a - (rest - a)
            out[e] = out.get(e, 0) + w
    return Laurent(out, var="q")


def kronecker2_framed_coefficient(d1, convention=TABLE):
    """The same coefficient as a SymLaurent."""
    return sym_from_q(kronecker2_coefficient_q(d1, convention))


def _hirzebruch_small(n, d1, d2, g, convention):
    """Closed-form initial data for F_0, F_1, F_2; None when not covered."""
    if n == 0:
        if d1 == 0 or d2 == 0:
            return _bps(-1, [1]) if d1 + d2 == 1 else _bps(g - 2, [])
        if (d1, d2) == (1, 1):
            return _bps(0, [-1])
        return None
    if n == 1:
        if d1 > d2:
            return _bps(g - 2, [])
        table = {
            (0, 1): _bps(-1, [1]),
            (1, 1): _bps(-1, [-1]),
            (1, 2): _bps(0, [1]),
            (2, 2): _bps(0, [-1]),
            (0, 2): _bps(0, []),
        }
        return table.get((d1, d2))
    if n == 2:
        if d2 == d1 + 1:
            return _bps(-1, [1])
        if (d1, d2) == (0, 2):
            return _bps(0, [])
        if d2 == d1 + 2:
            return BpsPolynomial(0, -spoly_from_q(kronecker2_coefficient_q(d1, convention)))
        return None
    return None


def _from_oracle(pair, beta, budget=None):
    # local import: quiverdt depends on geometry only, but keep gwrec importable alone
    from ..quiverdt.dt import dt_invariant
    from ..quiverdt.families import local_quiver
    from ..quiverdt.hn import DEFAULT_BUDGET

    Q, d, theta = local_quiver(pair, beta, "local")
    omega = dt_invariant(Q, d, theta, budget or DEFAULT_BUDGET)
    try:
        p = omega.in_q()
    except ArithmeticError:
        raise UnsupportedOracle(f"DT invariant of {beta} has odd powers of v") from None
    sign = (-1) ** ((intersect_D(pair, beta) - 1) % 2)
    return BpsPolynomial(intersect_Gamma(pair, beta) - 2, spoly_from_q(p) * sign)


def initial_series(pair, beta, convention=TABLE, budget=None):
    """F_beta from the initial data, or NotInitial when the recursion must be used."""
    pair, beta = deformation_reduce(pair, beta)
    g = intersect_Gamma(pair, beta)
    if g <= 0:
        raise NonPositiveGamma(f"Gamma.beta = {g} for {beta} on {pair}")
    if pair.kind == "p2line":
        if beta.d == 1:
            return _bps(0, [1])
        raise NotInitial(f"{beta} on {pair}")
    if pair.kind == "p2conic":
        if beta.d == 1:
            return _bps(-1, [-1])
        if beta.d == 2:
            return _bps(0, [-1])
        raise NotInitial(f"{beta} on {pair}")
    d1, d2 = beta.coords
    if pair.n <= 2:
        out = _hirzebruch_small(pair.n, d1, d2, g, convention)
        if out is not None:
            return out
        raise NotInitial(f"{beta} on {pair}")
    if g >= 3:
        raise NotInitial(f"{beta} on {pair}")
    return _from_oracle(pair, beta, budget)


def is_initial(pair, beta, convention=TABLE):
    try:
        pair, beta = deformation_reduce(pair, beta)
        if pair.kind == "hirzebruch" and pair.n >= 3:
            return intersect_Gamma(pair, beta) <= 2
        initial_series(pair, beta, convention)
        return True
    except NotInitial:
        return False
