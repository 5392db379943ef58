"""The framed/unframed generating-series relation on a ray of a quiver.

For a stability theta and the ray {d != 0 : theta(d) = 0} with symmetric Euler
form, the framed DT invariants (hat quiver, stability (1, theta)) satisfy

    1 + sum Omega^fr_d (-1)^{n.d} x^d = Exp( sum P_{P^{n.d - 1}} Omega_d (-1)^{n.d} x^d ).

Both sides are computed here from the HN oracle; the Exp is taken in each
Adams convention so the one that actually holds can be recorded.
"""

from ..exactalg.laurent import Laurent
from .dt import dt_invariant, projective_space_poly, ray_vectors, stack_dt_invariants
from .families import C, F, L, family_quiver
from .hn import DEFAULT_BUDGET
from .plethysm import ADAMS_MODES, MultiSeries, plethystic_exp
from .quiver import Quiver, Stability, framed


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def framed_side(Q, n, theta, box, budget=DEFAULT_BUDGET):
    """{d: Omega^fr_d} over the ray inside ``box``."""
    theta = Stability(theta)
    Qhat, _ = framed(Q, n)
    th_hat = Stability((1,) + tuple(theta))
    return {e: dt_invariant(Qhat, (1,) + tuple(e), th_hat, budget) for e in ray_vectors(theta, box)}


def verify_framed_identity(Q, n, theta, box, budget=DEFAULT_BUDGET):
    """Compare both sides coefficientwise for each Adams mode.

    Returns {"lhs": {d: str}, "modes": {mode: {"ok": bool, "mismatches": [d, ...]}},
    "matching": [modes that agree]}.
    """
    theta = Stability(theta)
    box = tuple(box)
    r = len(box)
    omega = stack_dt_invariants(Q, theta, box, budget)  # raises on asymmetric Euler form
    omega_fr = framed_side(Q, n, theta, box, budget)
    lhs_terms = {(0,) * r: 1}
    single = {}
    for e in ray_vectors(theta, box):
        k = _dot(n, e)
        sign = (-1) ** (k % 2)
        lhs_terms[e] = omega_fr[e].poly * sign
        single[e] = projective_space_poly(k) * omega[e].poly * sign if k else Laurent(var="v")
    lhs = MultiSeries(lhs_terms, r, box, var="v")
    f = MultiSeries(single, r, box, var="v")
    modes = {}
    for mode in ADAMS_MODES:
        rhs = plethystic_exp(f, mode)
        bad = sorted(e for e in set(lhs.terms) | set(rhs.terms) if lhs[e] != rhs[e])
        modes[mode] = {"ok": not bad, "mismatches": [list(e) for e in bad]}
    return {
        "lhs": {",".join(map(str, e)): c.to_str() for e, c in sorted(lhs.terms.items())},
        "omega": {",".join(map(str, e)): w.to_str() for e, w in sorted(omega.items())},
        "modes": modes,
        "matching": [m for m in ADAMS_MODES if modes[m]["ok"]],
    }


def keyrel_case(family, T):
    """(Q, n, theta, box) for the standard test rays.

    "L": 2T left vertices, theta = (1,...,1,-2), box (1^{2T}; T), n = e_j.
    "C": T left vertices, theta = (1,...,1,-1), box (1^T; T), n = 2 e_j.
    "K2": 2-Kronecker j1 => j2, theta = (1,-1), box (T, T), n = (1, 1).
    """
    if family == L:
        Q = family_quiver(L, 2 * T)
        return Q, (0,) * (2 * T) + (1,), (1,) * (2 * T) + (-2,), (1,) * (2 * T) + (T,)
    if family == C:
        Q = family_quiver(C, T)
        return Q, (0,) * T + (2,), (1,) * T + (-1,), (1,) * T + (T,)
    if family in ("K2", F):
        Q = Quiver(["j1", "j2"], [("j1", "j2", 2)])
        return Q, (1, 1), (1, -1), (T, T)
    raise ValueError(f"unknown key-relation family {family!r}")


def closed_form_check(T, budget=DEFAULT_BUDGET):
    """Framed 2-Kronecker invariants against both closed forms for x^0..x^T.

    Returns {"oracle": [...], "table": [...], "plethystic": [...]} as q-Laurent strings
    together with the first order where the table form deviates (or None).
    """
    from ..gwrec.initial import PLETHYSTIC, TABLE, kronecker2_coefficient_q

    Q, n, theta, box = keyrel_case("K2", T)
    fr = framed_side(Q, n, theta, box, budget)
    oracle, table, pleth = [], [], []
    first_bad = None
    # the framed vector (1; k, k) carries the coefficient of x^k, i.e. d1 = k + 1
    for k in range(T + 1):
        got = fr[(k, k)].in_q() if k else Laurent({0: 1}, var="q")
        want_t = kronecker2_coefficient_q(k + 1, TABLE)
        want_p = kronecker2_coefficient_q(k + 1, PLETHYSTIC)
        oracle.append(got.to_str())
        table.append(want_t.to_str())
        pleth.append(want_p.to_str())
        if first_bad is None and got != want_t:
            first_bad = k
    return {"oracle": oracle, "table": table, "plethystic": pleth, "table_deviates_at_order": first_bad}
