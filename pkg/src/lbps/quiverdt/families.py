"""The three hard-coded quiver families and their framings.

L_m:   left vertices i1..im, one arrow i_k -> j.
C_m:   left vertices i1..im, two arrows i_k -> j.
F^n_m: left vertices i1..im, one arrow i_k -> j1 and one i_k -> j2, n arrows j1 -> j2.
"""

from fractions import Fraction
from math import gcd, lcm

from ..errors import UnsupportedClass
from ..geometry import deformation_reduce, intersect_Gamma
from .quiver import DimVector, Quiver, Stability, antiattractor, framed

L, C, F = "L", "C", "F"


def _left(m):
    return [f"i{k}" for k in range(1, m + 1)]


def family_quiver(family, m, n=0):
    if m < 0:
        raise ValueError("number of left vertices must be >= 0")
    left = _left(m)
    if family == L:
        return Quiver(left + ["j"], [(v, "j", 1) for v in left])
    if family == C:
        return Quiver(left + ["j"], [(v, "j", 2) for v in left])
    if family == F:
        if n < 0:
            raise ValueError("F family needs n >= 0")
        arrows = [(v, "j1", 1) for v in left] + [(v, "j2", 1) for v in left]
        if n:
            arrows.append(("j1", "j2", n))
        return Quiver(left + ["j1", "j2"], arrows)
    raise ValueError(f"unknown quiver family {family!r}")


def family_vector(family, m, dims):
    dims = (dims,) if isinstance(dims, int) else tuple(dims)
    want = 2 if family == F else 1
    if len(dims) != want:
        raise ValueError(f"family {family} takes {want} sink dimension(s)")
    return DimVector((1,) * m + dims)


def framing_vector(family, m):
    """n = e_j (L), 2 e_j (C), e_j1 + e_j2 (F)."""
    if family == L:
        return (0,) * m + (1,)
    if family == C:
        return (0,) * m + (2,)
    return (0,) * m + (1, 1)


def family_moduli(family, m, dims, n=0):
    """(Q, d, theta) with the anti-attractor stability."""
    Q = family_quiver(family, m, n)
    d = family_vector(family, m, dims)
    return Q, d, antiattractor(Q, d)


def normalized_stability(family, m, dims, n=0):
    """The anti-attractor rescaled so that left vertices weigh 1 (kept as fractions).

    Without left vertices the primitive integer multiple is used.
    """
    Q, d, theta = family_moduli(family, m, dims, n)
    if m:
        scale = theta[0]
    else:
        scale = 0
        for t in theta:
            scale = gcd(scale, t)
    if scale == 0:
        return [Fraction(0)] * len(theta)
    return [Fraction(t, scale) for t in theta]


def framed_family(family, m, dims, n=0, scaling="integral"):
    """Hat quiver of the n-framed moduli M^{fr}: (Qhat, dhat, theta_hat).

    theta_hat = (1, theta).  With scaling="integral" theta is the integer
    anti-attractor, which gives the usual framed stability (theta-semistable
    and no proper subrepresentation of the same slope contains the framing).
    With scaling="unit-left" theta is first rescaled as in
    normalized_stability and the result is cleared of denominators.
    """
    Q, d, theta = family_moduli(family, m, dims, n)
    if scaling == "integral":
        th = [Fraction(t) for t in theta]
    elif scaling == "unit-left":
        th = normalized_stability(family, m, dims, n)
    else:
        raise ValueError(f"unknown scaling {scaling!r}")
    Qhat, _ = framed(Q, framing_vector(family, m))
    full = [Fraction(1)] + th
    den = 1
    for x in full:
        den = lcm(den, x.denominator)
    return Qhat, DimVector((1,) + tuple(d)), Stability(int(x * den) for x in full)


def framing_degree(family, dims):
    """n . d, the contact order D.beta of the framed family."""
    dims = (dims,) if isinstance(dims, int) else tuple(dims)
    if family == L:
        return dims[0]
    if family == C:
        return 2 * dims[0]
    return dims[0] + dims[1]


def quiver_data(pair, beta, side="local"):
    """(family, m, sink dims, n) of the quiver attached to (pair, beta)."""
    if side not in ("local", "relative"):
        raise ValueError("side must be 'local' or 'relative'")
    pair, beta = deformation_reduce(pair, beta)
    g = intersect_Gamma(pair, beta)
    shift = 1 if side == "local" else 0
    if g < 1:
        raise UnsupportedClass(f"class {beta} on {pair} has Gamma.beta = {g}")
    m = g - shift
    if pair.kind == "p2line":
        return L, m, (beta.d,), 0
    if pair.kind == "p2conic":
        return C, m, (beta.d,), 0
    return F, m, tuple(beta.coords), pair.n


def local_quiver(pair, beta, side="local"):
    """(Quiver, DimVector, Stability) for the local (m - 1 left vertices) or relative (m) side."""
    family, m, dims, n = quiver_data(pair, beta, side)
    return family_moduli(family, m, dims, n)
