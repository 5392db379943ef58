"""The recursion for quiver DT invariants z_beta = Omega(M_beta) of the local quivers.

    z_beta = sum_{b1 + b2 = beta} P_{P^{k-1}}^2 z_b1 z_b2 binom(G.beta - 3, G.b1 - 1),  k = D.b1

Seeds are the classes with G.beta <= 2.  The documented ones are z^L_1 = 1,
z^C_1 = z^C_2 = 1 and z^{F_n}_{1,n+1} = 1; any other seed must be supplied or
taken from the HN oracle.
"""

from ..errors import MissingSeed
from ..exactalg.laurent import Laurent
from ..geometry import CurveClass, Hirzebruch, P2Conic, P2Line, intersect_D, intersect_Gamma, splits
from .dt import DtInvariant, dt_invariant, projective_space_poly
from .families import C, F, L, local_quiver
from .hn import DEFAULT_BUDGET


def family_pair(family, n=0):
    if family == L:
        return P2Line()
    if family == C:
        return P2Conic()
    if family == F:
        return Hirzebruch(n)
    raise ValueError(f"unknown quiver family {family!r}")


def default_seeds(family, n=0):
    one = DtInvariant(1)
    if family == L:
        return {(1,): one}
    if family == C:
        return {(1,): one, (2,): one}
    return {(1, n + 1): one}


def _binom(a, b):
    from math import comb

    return comb(a, b) if 0 <= b <= a else 0


def qdt_recursion(family, dims, n=0, seeds=None, use_oracle=False, budget=DEFAULT_BUDGET, _memo=None):
    """z_beta for the class with quiver parameters ``dims`` (d for L/C, (d1, d2) for F)."""
    pair = family_pair(family, n)
    beta = CurveClass((dims,) if isinstance(dims, int) else tuple(dims))
    seeds = default_seeds(family, n) if seeds is None else seeds
    memo = {} if _memo is None else _memo
    return _z(pair, beta, family, n, seeds, use_oracle, budget, memo)


def _z(pair, beta, family, n, seeds, use_oracle, budget, memo):
    key = beta.coords
    if key in memo:
        return memo[key]
    g = intersect_Gamma(pair, beta)
    if key in seeds:
        val = seeds[key]
    elif g <= 2:
        if not use_oracle:
            raise MissingSeed(f"no seed for {family} class {beta} (Gamma.beta = {g})")
        Q, d, theta = local_quiver(pair, beta, "local")
        val = dt_invariant(Q, d, theta, budget)
    else:
        total = Laurent(var="v")
        for b1, b2 in splits(beta):
            c = _binom(g - 3, intersect_Gamma(pair, b1) - 1)
            if not c:
                continue
            z1 = _z(pair, b1, family, n, seeds, use_oracle, budget, memo)
            if z1.is_zero():
                continue
            z2 = _z(pair, b2, family, n, seeds, use_oracle, budget, memo)
            p = projective_space_poly(intersect_D(pair, b1))
            total = total + p * p * z1.poly * z2.poly * c
        val = DtInvariant(total)
    memo[key] = val
    return val
