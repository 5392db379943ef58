"""The nef pair (F_1, D = f): the genus-zero recursion needs an extra term.

Classes are (d1, d2) in the basis (C_{-1}, f).  Here D.beta = d1 and
Gamma.beta = (-K - f).beta = 2 d2.  The section C_1 = C_{-1} + f is (1, 1).
Fiber multiples (d1 = 0) have vanishing relative invariants, and only the
d1 <= 1 cone is covered, where N_{C_1} = 1 is the one seed needed.
"""

from fractions import Fraction

from ..gwrec.engine import binom


def _D(b):
    return b[0]


def _G(b):
    return 2 * b[1]


def _splits(b):
    for a1 in range(b[0] + 1):
        for a2 in range(b[1] + 1):
            if (a1, a2) not in ((0, 0), b):
                yield (a1, a2), (b[0] - a1, b[1] - a2)


def nef_relative(beta, modified=True, _memo=None):
    """N^{X/D}_{0,beta} on (F_1, f), with or without the (D.beta) N_{beta - f} term."""
    beta = tuple(getattr(beta, "coords", beta))
    if beta[0] > 1:
        raise ValueError("only classes with d1 <= 1 have seeds")
    memo = {} if _memo is None else _memo
    if beta in memo:
        return memo[beta]
    if beta[0] == 0:
        val = Fraction(0)
    elif _G(beta) < 3:
        val = Fraction(1) if beta == (1, 1) else Fraction(0)
    else:
        d = _D(beta)
        acc = Fraction(0)
        for b1, b2 in _splits(beta):
            d1, d2 = _D(b1), _D(b2)
            if d1 <= 0 or d2 <= 0:
                continue
            c = binom(_G(beta) - 3, _G(b1) - 1)
            if c:
                acc += Fraction(d1 * d1 * c) * nef_relative(b1, modified, memo) / d1 * nef_relative(b2, modified, memo) / d2
        if modified:
            acc += d * nef_relative((beta[0], beta[1] - 1), modified, memo)
        val = acc * d
    memo[beta] = val
    return val


def nef_local(beta, modified=True):
    """N^{loc} from N^{X/D} = (-1)^{D.beta - 1} (D.beta) N^{loc}."""
    beta = tuple(getattr(beta, "coords", beta))
    d = _D(beta)
    return Fraction((-1) ** ((d - 1) % 2), d) * nef_relative(beta, modified)


def nef_counterexample(n_max=8):
    rows = []
    for n in range(1, n_max + 1):
        beta = (1, n + 1)
        rows.append({
            "class": f"C1+{n}f",
            "modified": str(nef_relative(beta, True)),
            "unmodified": str(nef_relative(beta, False)),
        })
    constant = all(r["modified"] == "1" for r in rows)
    differs = [r["class"] for r in rows if r["modified"] != r["unmodified"]]
    fiber = [str(nef_relative((0, k))) for k in (1, 2, 3)]
    return {
        "check": "nef",
        "n_max": n_max,
        "rows": rows,
        "fiber_multiples": fiber,
        "modified_constant": constant,
        "unmodified_differs_at": differs,
        "ok": constant and bool(differs) and all(x == "0" for x in fiber),
    }
