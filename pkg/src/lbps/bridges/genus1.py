"""Two genus-one recursions for O_{P^2}(-1), fed with genus-zero numbers from the main engine."""

from fractions import Fraction
from functools import lru_cache

from ..exactalg.spoly import h_expand
from ..geometry import P2Line, cls
from ..gwrec.engine import binom, compute_series


@lru_cache(maxsize=None)
def genus0_line(d):
    """N_{0,d} of the (P^2, line) pair, read off the all-genus series."""
    return h_expand(compute_series(P2Line(), cls(d)), 0)[0]


@lru_cache(maxsize=None)
def genus1_wdvv(d):
    """N_{1,d} from the genus-one slice of the all-genus recursion."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if d == 1:
        return Fraction(0)
    total = Fraction(0)
    for d1 in range(1, d):
        d2 = d - d1
        n01, n02 = genus0_line(d1), genus0_line(d2)
        term = n01 * n02 * Fraction(d1**4, 12) - (n01 * genus1_wdvv(d2) + n02 * genus1_wdvv(d1)) * d1 * d1
        total += term * binom(2 * d - 3, 2 * d1 - 1)
    return total


@lru_cache(maxsize=None)
def genus1_virasoro(d):
    """N_{1,d} from the Virasoro-type recursion."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if d == 1:
        return Fraction(0)
    total = -Fraction(d * (d - 1), 24) * genus0_line(d)
    c = Fraction((d - 1) * (2 * d - 1), 2)
    for d1 in range(1, d):
        total -= c * binom(2 * d - 3, 2 * d1 - 2) * genus0_line(d1) * genus1_virasoro(d - d1)
    return total


def genus1_engine(d):
    """N_{1,d} straight from the h-expansion of the series."""
    return h_expand(compute_series(P2Line(), cls(d)), 1)[1]


def verify_genus1(d_max=19):
    rows = []
    for d in range(1, d_max + 1):
        w, v, e = genus1_wdvv(d), genus1_virasoro(d), genus1_engine(d)
        rows.append({"d": d, "wdvv": str(w), "virasoro": str(v), "engine": str(e), "ok": w == v == e})
    return {"check": "genus1", "d_max": d_max, "ok": all(r["ok"] for r in rows), "rows": rows}
