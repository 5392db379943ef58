from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lbps.bridges import (
    RelativeSeries,
    antisymmetric_identity,
    binomial_identity,
    bridge_report,
    castelnuovo_check,
    fw_relative_recursion,
    genus1_engine,
    genus1_virasoro,
    genus1_wdvv,
    gw_side,
    local_relative_agree,
    local_to_relative,
    nef_counterexample,
    nef_relative,
    quiver_side,
    relative_genus0,
    section6_pairs,
    verify_gw_quiver,
)
from lbps.errors import ZeroSeries
from lbps.exactalg import SPoly
from lbps.geometry import CurveClass, Hirzebruch, P2Conic, P2Line, classes_up_to, intersect_D, intersect_Gamma
from lbps.gwrec import PLETHYSTIC, SeriesTable, compute_series

import oracles


def cc(*c):
    return CurveClass(c)


# genus one ----------------------------------------------------------------------

@pytest.mark.parametrize("d", [2, 3, 4])
def test_genus1_against_h_expansion_oracle(d):
    want = oracles.gw_numbers(oracles.p2_series("line", d), 2 * d, 1)[1]
    assert genus1_engine(d) == Fraction(int(want.p), int(want.q))


def test_genus1_known_values():
    assert genus1_wdvv(2) == Fraction(1, 12)
    assert genus1_virasoro(3) == Fraction(-13, 6)
    assert genus1_wdvv(1) == genus1_virasoro(1) == 0


@pytest.mark.parametrize("d", range(1, 12))
def test_genus1_recursions_agree(d):
    assert genus1_wdvv(d) == genus1_virasoro(d) == genus1_engine(d)


# relative series ------------------------------------------------------------------

def test_relative_line_degree_one():
    r = local_to_relative(P2Line(), cc(1))
    assert r == RelativeSeries(1, 1, 1, SPoly((1,)))
    assert r.genus0() == 1
    assert r.gw_numbers(1)[0] == 1


def test_quantum_integer_squares_to_contact_factor():
    from lbps.exactalg import chebyshev_c, spoly_to_q

    for k in range(1, 6):
        qv = RelativeSeries(k, 1, 0, SPoly((1,))).quantum_integer_v()
        assert qv * qv == spoly_to_q(chebyshev_c(k)).with_var("v").adams(2)


@given(st.sampled_from(section6_pairs()), st.integers(0, 4), st.integers(1, 6))
@settings(max_examples=40, deadline=None)
def test_relative_genus0_from_local(pair, a, b):
    beta = cc(b) if pair.is_p2 else cc(a, b)
    if intersect_Gamma(pair, beta) <= 0 or intersect_Gamma(pair, beta) > 10:
        return
    assert local_relative_agree(pair, beta)
    assert antisymmetric_identity(pair, beta)


@given(st.integers(3, 20), st.integers(0, 20))
def test_binomial_identity(g, g1):
    assert binomial_identity(g, g1)


@pytest.mark.parametrize("pair,beta", [(P2Line(), cc(d)) for d in (2, 3, 4)] + [(P2Conic(), cc(d)) for d in (3, 4, 5)])
def test_fw_recursion_general_divisor(pair, beta):
    # H = the hyperplane class on P^2: H.D = 1 (line) or 2 (conic)
    hd = 1 if pair == P2Line() else 2
    assert fw_relative_recursion(pair, beta, hd, lambda b: b.d) == relative_genus0(pair, beta)


@pytest.mark.parametrize("beta", [cc(1, 3), cc(2, 3), cc(2, 4), cc(3, 4)])
def test_fw_recursion_gamma_divisor(beta):
    pair = Hirzebruch(1)
    # H = Gamma, with Gamma.D = 2
    assert fw_relative_recursion(pair, beta, 2, lambda b: intersect_Gamma(pair, b)) == relative_genus0(pair, beta)


# Castelnuovo ---------------------------------------------------------------------

@pytest.mark.parametrize("pair,beta,g", [(P2Line(), cc(5), 6), (P2Conic(), cc(5), 6), (Hirzebruch(2), cc(5, 7), 4)])
def test_castelnuovo_examples(pair, beta, g):
    r = castelnuovo_check(pair, beta)
    assert r["ok"] and r["g_max"] == g


def test_castelnuovo_zero_series():
    with pytest.raises(ZeroSeries):
        castelnuovo_check(Hirzebruch(0), cc(0, 2))


@given(st.sampled_from(section6_pairs()), st.integers(0, 5), st.integers(1, 8))
@settings(max_examples=60, deadline=None)
def test_castelnuovo_law(pair, a, b):
    beta = cc(b) if pair.is_p2 else cc(a, b)
    if not 1 <= intersect_Gamma(pair, beta) <= 12:
        return
    try:
        assert castelnuovo_check(pair, beta)["ok"]
    except ZeroSeries:
        pass


# quiver bridges ------------------------------------------------------------------

@pytest.mark.parametrize("pair,beta", [(P2Line(), cc(2)), (P2Conic(), cc(3)), (Hirzebruch(0), cc(2, 2)),
                                       (Hirzebruch(1), cc(2, 3)), (Hirzebruch(2), cc(2, 4))])
def test_gw_quiver_local(pair, beta):
    assert verify_gw_quiver(pair, beta, "local")


def test_gw_quiver_relative_non_coprime():
    # conic d = 2 has a non-coprime relative quiver; the stack series handles it
    assert verify_gw_quiver(P2Conic(), cc(2), "relative", SeriesTable(PLETHYSTIC))


def test_report_schema():
    rows = bridge_report(P2Conic(), cc(3))
    assert {r["check"] for r in rows} == {"gw-quiver-local", "gw-quiver-relative", "small-resolution"}
    for r in rows:
        assert set(r) == {"check", "pair", "class", "status", "lhs", "rhs"}
        assert r["status"] in ("ok", "fail", "unsupported")


def test_report_caps_dimension():
    rows = bridge_report(P2Line(), cc(4), max_dim=3)
    assert all(r["status"] == "unsupported" for r in rows)


def test_kronecker_table_cell_against_oracle():
    # F_2 (3,5) is the first class built from the second-order Kronecker coefficient
    pair, beta = Hirzebruch(2), cc(3, 5)
    assert gw_side(pair, beta, "local", SeriesTable(PLETHYSTIC)) == quiver_side(pair, beta)


# nef pair ------------------------------------------------------------------------

def test_nef_counterexample():
    r = nef_counterexample(8)
    assert r["ok"]
    assert r["modified_constant"] and [row["modified"] for row in r["rows"]] == ["1"] * 8
    assert r["unmodified_differs_at"]
    assert r["fiber_multiples"] == ["0", "0", "0"]


@pytest.mark.parametrize("n", range(1, 9))
def test_nef_modified_is_one(n):
    assert nef_relative(cc(1, n + 1)) == 1
