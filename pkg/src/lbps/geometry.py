"""Surface pairs (X, D) with D rational and ample, and their curve classes.

Hirzebruch classes are written d1*C_{-n} + d2*f, with C_{-n}^2 = -n,
C_{-n}.f = 1, f^2 = 0 and D = C_n + s f = C_{-n} + (n + s) f.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import MismatchedGeometry


@dataclass(frozen=True, order=True)
class SurfacePair:
    kind: str  # "p2line" | "p2conic" | "hirzebruch"
    n: int = 0
    s: int = 1

    def __post_init__(self):
        if self.kind not in ("p2line", "p2conic", "hirzebruch"):
            raise ValueError(f"unknown pair kind {self.kind!r}")
        if self.kind == "hirzebruch":
            if self.n < 0:
                raise ValueError("Hirzebruch index n must be >= 0")
            if self.s < 1:
                raise ValueError("D = C_n + s f is ample only for s >= 1")
        elif (self.n, self.s) != (0, 1):
            raise ValueError("n and s only apply to Hirzebruch pairs")

    @property
    def is_p2(self):
        return self.kind != "hirzebruch"

    def __str__(self):
        if self.kind == "p2line":
            return "p2:line"
        if self.kind == "p2conic":
            return "p2:conic"
        return f"f{self.n}" if self.s == 1 else f"f{self.n}:s={self.s}"


def P2Line():
    return SurfacePair("p2line")


def P2Conic():
    return SurfacePair("p2conic")


def Hirzebruch(n, s=1):
    return SurfacePair("hirzebruch", n, s)


@dataclass(frozen=True, order=True)
class CurveClass:
    """A P^2 class has coords (d,); a Hirzebruch class has (d1, d2)."""

    coords: tuple

    def __post_init__(self):
        c = tuple(int(x) for x in self.coords)
        if len(c) not in (1, 2):
            raise ValueError("a class has one (P^2) or two (Hirzebruch) coordinates")
        if any(x < 0 for x in c):
            raise ValueError("class coordinates must be non-negative")
        if not any(c):
            raise ValueError("the zero class is not allowed")
        object.__setattr__(self, "coords", c)

    @property
    def d(self):
        return self.coords[0]

    def __str__(self):
        return ",".join(str(x) for x in self.coords)

    def __add__(self, other):
        return CurveClass(tuple(a + b for a, b in zip(self.coords, other.coords)))


def cls(*coords):
    if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
        coords = tuple(coords[0])
    return CurveClass(tuple(coords))


def _check(pair, beta):
    want = 1 if pair.is_p2 else 2
    if len(beta.coords) != want:
        raise MismatchedGeometry(f"class {beta} does not belong to {pair}")


def intersect_D(pair, beta):
    _check(pair, beta)
    if pair.kind == "p2line":
        return beta.d
    if pair.kind == "p2conic":
        return 2 * beta.d
    d1, d2 = beta.coords
    return pair.s * d1 + d2


def intersect_Gamma(pair, beta):
    """Gamma = -K_X - D."""
    _check(pair, beta)
    if pair.kind == "p2line":
        return 2 * beta.d
    if pair.kind == "p2conic":
        return beta.d
    d1, d2 = beta.coords
    return (2 - pair.n - pair.s) * d1 + d2


def intersect_K(pair, beta):
    _check(pair, beta)
    if pair.is_p2:
        return -3 * beta.d
    d1, d2 = beta.coords
    return (pair.n - 2) * d1 - 2 * d2


def self_intersect(pair, beta):
    _check(pair, beta)
    if pair.is_p2:
        return beta.d ** 2
    d1, d2 = beta.coords
    return -pair.n * d1 * d1 + 2 * d1 * d2


def arithmetic_genus(pair, beta):
    """(K + beta).beta / 2 + 1, the Castelnuovo bound."""
    return (intersect_K(pair, beta) + self_intersect(pair, beta)) // 2 + 1


def virtual_genus(pair):
    """1 - Gamma.D / 2; zero for every constructible pair."""
    if pair.kind == "p2line":
        gd = 2  # (3H - H).H
    elif pair.kind == "p2conic":
        gd = 2  # (3H - 2H).2H
    else:
        n, s = pair.n, pair.s
        # -K = 2C_{-n} + (n+2) f, D = C_{-n} + (n+s) f
        a1, a2 = 2 - 1, (n + 2) - (n + s)
        b1, b2 = 1, n + s
        gd = -n * a1 * b1 + a1 * b2 + a2 * b1
    return 1 - Fraction(gd, 2)


def deformation_reduce(pair, beta):
    """Move (F_n, s) to (F_{n+2s-2}, 1); (d1, d2) -> (d1, d2 + (s-1) d1)."""
    _check(pair, beta)
    if pair.is_p2 or pair.s == 1:
        return pair, beta
    d1, d2 = beta.coords
    k = pair.s - 1
    return Hirzebruch(pair.n + 2 * k, 1), CurveClass((d1, d2 + k * d1))


def splits(beta):
    """All ordered (beta1, beta2), both nonzero and effective, summing to beta."""
    c = beta.coords
    out = []
    if len(c) == 1:
        for a in range(1, c[0]):
            out.append((CurveClass((a,)), CurveClass((c[0] - a,))))
        return out
    for a1 in range(c[0] + 1):
        for a2 in range(c[1] + 1):
            if (a1, a2) in ((0, 0), c):
                continue
            out.append((CurveClass((a1, a2)), CurveClass((c[0] - a1, c[1] - a2))))
    return out


_PAIR_RE = re.compile(r"^f(\d+)(?::s=(\d+))?$")


def parse_pair(text):
    t = text.strip().lower().replace(" ", "")
    if t == "p2:line":
        return P2Line()
    if t == "p2:conic":
        return P2Conic()
    m = _PAIR_RE.match(t)
    if not m:
        raise ValueError(f"cannot parse pair {text!r}")
    n = int(m.group(1))
    s = int(m.group(2)) if m.group(2) else 1
    return Hirzebruch(n, s)


def parse_class(pair, text):
    parts = [p for p in text.replace(" ", "").split(",") if p != ""]
    try:
        coords = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"cannot parse class {text!r}") from None
    beta = CurveClass(coords)
    _check(pair, beta)
    return beta


def classes_up_to(pair, max_gamma, max_coord=None):
    """Classes with 1 <= Gamma.beta <= max_gamma, sorted; Hirzebruch d1 bounded when needed.

    For Hirzebruch pairs with n + s - 2 > 0 there are infinitely many classes with
    bounded Gamma.beta; ``max_coord`` then caps d1 (default: max_gamma).
    """
    out = []
    if pair.is_p2:
        per = 2 if pair.kind == "p2line" else 1
        for d in range(1, max_gamma // per + 1):
            out.append(CurveClass((d,)))
        return out
    slope = 2 - pair.n - pair.s
    cap = max_gamma if max_coord is None else max_coord
    for d1 in range(0, cap + 1):
        for d2 in range(0, max_gamma - slope * d1 + 1):
            if d1 == d2 == 0:
                continue
            g = slope * d1 + d2
            if 1 <= g <= max_gamma:
                out.append(CurveClass((d1, d2)))
    return sorted(out)
