"""GW side against the quiver oracle: the BPS theorem, the GW/quiver theorem and
the P^{k-1}-bundle factorisation between the relative and local quivers."""

from ..errors import UnsupportedClass, UnsupportedOracle
from ..exactalg.spoly import spoly_to_q
from ..geometry import Hirzebruch, P2Conic, P2Line, classes_up_to, deformation_reduce, intersect_D
from ..gwrec.engine import compute_series
from ..quiverdt.dt import DtInvariant, dt_invariant, projective_space_poly, stack_dt_invariant
from ..quiverdt.families import local_quiver
from ..quiverdt.hn import DEFAULT_BUDGET
from ..quiverdt.quiver import is_coprime
from .relative import local_to_relative

SIDES = ("local", "relative")


def section6_pairs():
    return [P2Line(), P2Conic(), Hirzebruch(0), Hirzebruch(1), Hirzebruch(2)]


def gw_side(pair, beta, side="local", table=None):
    """The GW prediction for the quiver DT invariant, as a DtInvariant.

    local: (-1)^{D.beta - 1} P_beta(2 - q - 1/q); relative: [D.beta] P_beta(...).
    """
    if side == "relative":
        return DtInvariant(local_to_relative(pair, beta, table).quiver_side())
    pair, beta = deformation_reduce(pair, beta)
    f = compute_series(pair, beta, table)
    sign = (-1) ** ((intersect_D(pair, beta) - 1) % 2)
    return DtInvariant(spoly_to_q(f.poly).with_var("v").adams(2) * sign)


def quiver_side(pair, beta, side="local", budget=DEFAULT_BUDGET):
    """Omega of the attached quiver; non-coprime vectors go through the stack series."""
    Q, d, theta = local_quiver(pair, beta, side)
    if is_coprime(theta, d):
        return dt_invariant(Q, d, theta, budget)
    return stack_dt_invariant(Q, d, theta, budget)


def quiver_size(pair, beta, side="local"):
    """(total dimension, coprime?) of the quiver attached to the class."""
    Q, d, theta = local_quiver(pair, beta, side)
    return sum(d), is_coprime(theta, d)


def verify_gw_quiver(pair, beta, side="local", table=None, budget=DEFAULT_BUDGET):
    if side not in SIDES:
        raise ValueError("side must be 'local' or 'relative'")
    return gw_side(pair, beta, side, table) == quiver_side(pair, beta, side, budget)


def verify_small_resolution(pair, beta, budget=DEFAULT_BUDGET):
    """Omega(relative quiver) = P_{P^{k-1}} Omega(local quiver), k = D.beta."""
    pair, beta = deformation_reduce(pair, beta)
    k = intersect_D(pair, beta)
    top = quiver_side(pair, beta, "relative", budget)
    bottom = quiver_side(pair, beta, "local", budget)
    return top == bottom * projective_space_poly(k)


def _entry(check, pair, beta, status, lhs="", rhs=""):
    return {"check": check, "pair": str(pair), "class": str(beta), "status": status, "lhs": lhs, "rhs": rhs}


def bridge_report(pair, beta, table=None, max_dim=12, budget=DEFAULT_BUDGET, max_stack_dim=8):
    """The three identities for one class as JSON-ready dicts.

    Non-coprime quivers are much slower (the whole ray below d is needed), so
    they get their own, smaller, dimension cap.
    """
    out = []
    feasible, omega = {}, {}
    for side in SIDES:
        try:
            size, coprime = quiver_size(pair, beta, side)
        except UnsupportedClass as exc:
            feasible[side] = False
            out.append(_entry(f"gw-quiver-{side}", pair, beta, "unsupported", str(exc)))
            continue
        cap = max_dim if coprime else min(max_dim, max_stack_dim)
        feasible[side] = size <= cap
        name = f"gw-quiver-{side}"
        if not feasible[side]:
            why = f"total dimension {size} > {cap}" + ("" if coprime else " (not coprime)")
            out.append(_entry(name, pair, beta, "unsupported", why))
            continue
        try:
            lhs = gw_side(pair, beta, side, table)
            rhs = omega[side] = quiver_side(pair, beta, side, budget)
        except UnsupportedOracle as exc:
            feasible[side] = False
            out.append(_entry(name, pair, beta, "unsupported", str(exc)))
            continue
        out.append(_entry(name, pair, beta, "ok" if lhs == rhs else "fail", lhs.to_str(), rhs.to_str()))
    if feasible.get("local") and feasible.get("relative"):
        p, b = deformation_reduce(pair, beta)
        k = intersect_D(p, b)
        top = omega["relative"]
        want = omega["local"] * projective_space_poly(k)
        out.append(_entry("small-resolution", pair, beta, "ok" if top == want else "fail", top.to_str(), want.to_str()))
    else:
        out.append(_entry("small-resolution", pair, beta, "unsupported", "a quiver side is not feasible"))
    return out


def bridge_classes(pair, max_gamma=8, max_dim=12):
    """Classes with 1 <= Gamma.beta <= max_gamma whose local quiver is at most max_dim-dimensional."""
    out = []
    for beta in classes_up_to(pair, max_gamma, max_coord=max_dim):
        try:
            size, _ = quiver_size(pair, beta, "local")
        except UnsupportedClass:
            continue
        if size <= max_dim:
            out.append(beta)
    return out


def bridge_sweep(pairs=None, max_gamma=8, max_dim=12, table=None, budget=DEFAULT_BUDGET, max_stack_dim=8):
    pairs = section6_pairs() if pairs is None else pairs
    out = []
    for pair in pairs:
        for beta in bridge_classes(pair, max_gamma, max_dim):
            out.extend(bridge_report(pair, beta, table, max_dim, budget, max_stack_dim))
    return out
