"""Relative series, BPS extraction and the Castelnuovo law."""

from dataclasses import dataclass

from ..errors import ZeroSeries
from ..exactalg.hseries import HSeries, sin_ratio
from ..exactalg.laurent import Laurent
from ..exactalg.spoly import SPoly, spoly_to_q
from ..geometry import arithmetic_genus, deformation_reduce, intersect_D, intersect_Gamma
from ..gwrec.engine import compute_series


@dataclass(frozen=True)
class RelativeSeries:
    """F^{X/D} = sign * [k] * s^offset * P(S) with k = D.beta and sign = (-1)^(k-1).

    The quantum integer [k] = sin(kh/2)/sin(h/2) is kept symbolic; only
    [k]^2 = c_k(S) is a polynomial in S.
    """

    k: int
    sign: int
    offset: int
    poly: SPoly

    def genus0(self):
        """N^{X/D}_{0,beta}: the leading h-coefficient sign * k * P(0)."""
        return self.sign * self.k * self.poly[0]

    def quantum_integer_v(self):
        """[k] in v = -q^{1/2}: (-1)^(k-1) (v^{k-1} + v^{k-3} + ... + v^{1-k})."""
        return Laurent({self.k - 1 - 2 * i: (-1) ** ((self.k - 1) % 2) for i in range(self.k)}, var="v")

    def quiver_side(self):
        """[k] P(2 - q - 1/q) as a Laurent polynomial in v (q = v^2)."""
        return self.quantum_integer_v() * spoly_to_q(self.poly).with_var("v").adams(2)

    def gw_numbers(self, g_max):
        """N^{X/D}_{g,beta} for g = 0..g_max: coefficients of h^(2g + offset)."""
        order = 2 * g_max + 2
        u = sin_ratio(order)
        # sin(kh/2)/sin(h/2) = k * u(kh)/u(h)
        uk = HSeries([c * self.k ** i for i, c in enumerate(u.coeffs)], order)
        qk = uk * u.inverse() * HSeries([self.k], order)
        h2u2 = u * u
        h2u2 = HSeries([0, 0] + list(h2u2.coeffs), order)
        series = HSeries([0], order)
        for a in reversed(self.poly.coeffs):
            series = series * h2u2 + HSeries([a], order)
        series = series * (u ** self.offset) * qk * HSeries([self.sign], order)
        return [series[2 * g] for g in range(g_max + 1)]


def local_to_relative(pair, beta, table=None):
    pair, beta = deformation_reduce(pair, beta)
    f = compute_series(pair, beta, table)
    k = intersect_D(pair, beta)
    return RelativeSeries(k, (-1) ** ((k - 1) % 2), intersect_Gamma(pair, beta) - 1, f.poly)


def bps_invariants(pair, beta, table=None):
    return list(compute_series(pair, beta, table).poly.coeffs)


def castelnuovo_check(pair, beta, table=None):
    """Top genus equals (K + beta).beta/2 + 1 with top BPS number (-1)^(g + D.beta - 1)."""
    pair, beta = deformation_reduce(pair, beta)
    f = compute_series(pair, beta, table)
    if f.is_zero():
        raise ZeroSeries(f"F_beta vanishes for {beta} on {pair}")
    g_max = f.poly.degree()
    top = f.poly[g_max]
    want_g = arithmetic_genus(pair, beta)
    want_sign = (-1) ** ((g_max + intersect_D(pair, beta) - 1) % 2)
    return {
        "g_max": g_max,
        "expected_g_max": want_g,
        "top": top,
        "top_sign": 1 if top > 0 else -1,
        "ok": g_max == want_g and top == want_sign,
    }
