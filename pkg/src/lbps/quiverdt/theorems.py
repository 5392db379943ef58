"""Counting-level checks of the duality, framing and small-resolution isomorphisms.

Each check returns a dict with keys case, family, params, status
("ok" | "fail" | "unsupported") and the two compared values as text.
"""

from math import gcd

from ..errors import UnsupportedOracle
from ..exactalg.laurent import Laurent
from .dt import DtInvariant, dt_invariant, projective_space_poly, stack_dt_invariant
from .families import C, F, L, family_moduli, framed_family, framing_degree
from .hn import DEFAULT_BUDGET, expected_dimension, moduli_count, sst_count
from .quiver import is_coprime


def _report(case, family, params, ok, lhs, rhs, unsupported=False):
    status = "unsupported" if unsupported else ("ok" if ok else "fail")
    return {
        "case": case,
        "family": family,
        "params": list(params),
        "status": status,
        "lhs": lhs if isinstance(lhs, str) else getattr(lhs, "to_str", lambda: str(lhs))(),
        "rhs": rhs if isinstance(rhs, str) else getattr(rhs, "to_str", lambda: str(rhs))(),
    }


def _count(family, m, dims, n, budget):
    Q, d, th = family_moduli(family, m, dims, n)
    if not is_coprime(th, d):
        raise UnsupportedOracle(f"{family}{(m,) + tuple(dims)} is not coprime")
    return moduli_count(Q, d, th, budget=budget, check_coprime=False)


# duality -------------------------------------------------------------------

def duality_cases(m_max=6, d_max=6, n_max=3):
    """(case, family, n, (m, dims), (m', dims')) satisfying the duality hypotheses."""
    out = []
    for m in range(1, m_max + 1):
        for d in range(1, d_max + 1):
            if gcd(m, d) == 1 and m - d > 0:
                out.append((1, L, 0, (m, (d,)), (m, (m - d,))))
            if gcd(m, d) == 1 and 2 * m - d > 0:
                out.append((2, C, 0, (m, (d,)), (m, (2 * m - d,))))
    for m in range(1, m_max + 1):
        for d1 in range(0, d_max + 1):
            for d2 in range(0, d_max + 1):
                if d1 + d2 and m > max(d1, d2) and gcd(m, d1 + d2) == 1:
                    out.append((3, F, 0, (m, (d1, d2)), (m, (m - d1, m - d2))))
    for n in range(1, n_max + 1):
        for d1 in range(0, d_max + 1):
            for d2 in range(0, d_max + 1):
                g = (1 - n) * d1 + d2
                if g >= 0 and g + 1 <= m_max and d1 + d2:
                    out.append((4, F, n, (g + 1, (d1, d2)), (g + 1, (d1 + 1, d2 + n + 1))))
    return out


def check_duality(case, family, n, a, b, budget=DEFAULT_BUDGET):
    params = (n,) + (a[0],) + a[1] + b[1]
    try:
        lhs = _count(family, a[0], a[1], n, budget)
        rhs = _count(family, b[0], b[1], n, budget)
    except UnsupportedOracle as exc:
        return _report(case, family, params, False, str(exc), "", unsupported=True)
    return _report(case, family, params, lhs == rhs, lhs, rhs)


# framing -------------------------------------------------------------------

def framing_cases(m_max=6, d_max=6, n_max=3):
    """(case, family, n, m, dims): M^{fr}_{m,dims} versus M_{m+1,dims}."""
    out = []
    for m in range(1, m_max + 1):
        for d in range(1, d_max + 1):
            if d % m == 0:
                out.append((1, L, 0, m, (d,)))
                out.append((2, C, 0, m, (d,)))
    for m in range(1, m_max + 1):
        for d1 in range(0, d_max + 1):
            for d2 in range(0, d_max + 1):
                if d1 + d2 and (d1 + d2) % m == 0:
                    out.append((3, F, 0, m, (d1, d2)))
    for n in range(1, n_max + 1):
        for d1 in range(0, d_max + 1):
            for d2 in range(0, d_max + 1):
                g = (1 - n) * d1 + d2
                if g >= 0 and g <= m_max and d1 + d2:
                    out.append((4, F, n, g, (d1, d2)))
    return out


def check_framing(case, family, n, m, dims, budget=DEFAULT_BUDGET):
    """Same quiver and dimension vector: the semistable loci must have equal point counts."""
    params = (n, m) + tuple(dims)
    Qh, dh, th_hat = framed_family(family, m, dims, n, scaling="unit-left")
    Qt, dt_, th_t = family_moduli(family, m + 1, dims, n)
    # the hat vertex i0 plays the role of the extra left vertex i_{m+1}
    perm = list(range(1, m + 1)) + [0] + list(range(m + 1, len(dh)))
    th_hat_perm = [th_hat[k] for k in perm]
    lhs = sst_count(Qt, dt_, th_hat_perm, budget=budget)
    rhs = sst_count(Qt, dt_, th_t, budget=budget)
    if _same_hat(Qh, Qt, perm):
        return _report(case, family, params, lhs == rhs, lhs, rhs)
    return _report(case, family, params, False, "hat quiver differs from target quiver", "")


def _same_hat(Qh, Qt, perm):
    n = len(perm)
    return all(Qh.a[perm[i]][perm[j]] == Qt.a[i][j] for i in range(n) for j in range(n))


# small resolutions -----------------------------------------------------------

def smallres_cases(m_max=6, d_max=6, n_max=3):
    """(case, family, n, m, dims): M^{fr}_{m-1,dims} -> M_{m,dims}."""
    out = []
    for m in range(1, m_max + 1):
        for d in range(1, d_max + 1):
            if m % d == 0:
                out.append((1, L, 0, m, (d,)))
            if d % m == 0:
                out.append((2, C, 0, m, (d,)))
    for m in range(1, m_max + 1):
        for d1 in range(1, d_max + 1):
            for d2 in range(1, d_max + 1):
                if (d1 + d2) % m == 0:
                    out.append((3, F, 0, m, (d1, d2)))
    for n in range(1, n_max + 1):
        for d1 in range(1, d_max + 1):
            for d2 in range(0, d_max + 1):
                g = (1 - n) * d1 + d2
                if d2 > max(d1 - 1, (n - 1) * d1) and 1 <= g <= m_max:
                    out.append((4, F, n, g, (d1, d2)))
    return out


def _qint(k):
    return Laurent({i: 1 for i in range(k)}, var="q")


def check_smallres(case, family, n, m, dims, budget=DEFAULT_BUDGET, with_ic=True, scaling="integral"):
    """Small resolution M^{fr}_{m-1} -> M_m at the level of counts.

    Always: Omega(M_m) is the normalised Poincare polynomial of M^{fr}_{m-1}
    (only with ``with_ic``).  When M_{m-1} is a fine moduli space as well:
    the framed count is [k]_q times its count (a P^{k-1}-bundle) and
    Omega(M_m) = P_{P^{k-1}} Omega(M_{m-1}).  At m = 1, or for non-coprime
    M_{m-1}, only the first statement applies.
    """
    params = (n, m) + tuple(dims)
    k = framing_degree(family, dims)
    Qh, dh, th_hat = framed_family(family, m - 1, dims, n, scaling=scaling)
    Qb, db, thb = family_moduli(family, m - 1, dims, n)
    base_fine = is_coprime(thb, db)
    if not (base_fine or with_ic):
        return _report(case, family, params, False, f"{family}{(m - 1,) + tuple(dims)} is not coprime", "",
                       unsupported=True)
    try:
        fr = moduli_count(Qh, dh, th_hat, budget=budget)
        if base_fine:
            base = _count(family, m - 1, dims, n, budget)
            if fr != base * _qint(k):
                return _report(case, family, params, False, fr, base * _qint(k))
        if not with_ic:
            return _report(case, family, params, True, fr, base * _qint(k))
        Q, d, th = family_moduli(family, m, dims, n)
        top = dt_invariant(Q, d, th, budget) if is_coprime(th, d) else stack_dt_invariant(Q, d, th, budget)
        ic = DtInvariant.from_betti(fr, expected_dimension(Qh, dh)) if fr else DtInvariant(0)
        if top != ic:
            return _report(case, family, params, False, top, ic)
        if base_fine:
            want = dt_invariant(Qb, db, thb, budget) * projective_space_poly(k)
            if top != want:
                return _report(case, family, params, False, top, want)
    except UnsupportedOracle as exc:
        return _report(case, family, params, False, str(exc), "", unsupported=True)
    return _report(case, family, params, True, top, ic)


def sweep(kind, m_max=6, d_max=6, n_max=3, budget=DEFAULT_BUDGET):
    if kind == "duality":
        return [check_duality(*c, budget=budget) for c in duality_cases(m_max, d_max, n_max)]
    if kind == "framed":
        return [check_framing(*c, budget=budget) for c in framing_cases(m_max, d_max, n_max)]
    if kind == "smallres":
        return [check_smallres(*c, budget=budget) for c in smallres_cases(m_max, d_max, n_max)]
    raise ValueError(f"unknown sweep {kind!r}")
