import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lbps.errors import BudgetExceeded, MissingSeed, NonzeroConstantTerm, NotCoprime
from lbps.exactalg import Laurent
from lbps.geometry import CurveClass, Hirzebruch, P2Conic, P2Line
from lbps.gwrec import compute_series
from lbps.quiverdt import (
    ADAMS_MODES,
    C,
    F,
    L,
    DtInvariant,
    MultiSeries,
    Quiver,
    XAndV,
    antiattractor,
    closed_form_check,
    dt_invariant,
    expected_dimension,
    family_moduli,
    framed_family,
    is_coprime,
    keyrel_case,
    moduli_count,
    plethystic_exp,
    plethystic_log,
    projective_space_poly,
    qdt_recursion,
    reflect_dim,
    stack_dt_invariant,
    verify_framed_identity,
)
from lbps.quiverdt.hn import clear_cache
from lbps.quiverdt.bruteforce import count_stable
from lbps.quiverdt.theorems import check_duality, check_framing, check_smallres, duality_cases, framing_cases

import oracles
from quiver_corpus import small_cases

SMALL = small_cases()


def K(m):
    return Quiver(["a", "b"], [("a", "b", m)])


# counting --------------------------------------------------------------------

@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_kronecker_line_count(m):
    # (1,1) stable reps of K_m: P^{m-1}  [DERIVED: closed form]
    Q = K(m)
    p = moduli_count(Q, (1, 1), antiattractor(Q, (1, 1)))
    for prime in (2, 3, 5):
        assert p.evaluate(prime) == oracles.kronecker_line_count(m, prime)


def test_kronecker_3_dim_12():
    # K_3 at (1,2): Grassmannian Gr(2,3) = P^2
    Q = K(3)
    assert moduli_count(Q, (1, 2), antiattractor(Q, (1, 2))) == Laurent({0: 1, 1: 1, 2: 1}, var="q")


@pytest.mark.parametrize("label,Q,d,theta", SMALL, ids=[c[0] for c in SMALL])
def test_counts_are_palindromic_of_expected_degree(label, Q, d, theta):
    p = moduli_count(Q, d, theta)
    if p.is_zero():
        return
    dim = expected_dimension(Q, d)
    assert p.max_degree() == dim and p.min_degree() == 0
    assert p.invert_variable().shift(dim) == p
    assert dt_invariant(Q, d, theta).is_palindromic()


@pytest.mark.parametrize("label,Q,d,theta", SMALL[::7], ids=[c[0] for c in SMALL[::7]])
def test_brute_force_f2(label, Q, d, theta):
    _, classes = count_stable(Q, d, theta, 2)
    assert classes == moduli_count(Q, d, theta).evaluate(2)


def test_not_coprime_is_refused():
    Q = K(2)
    with pytest.raises(NotCoprime):
        moduli_count(Q, (2, 2), antiattractor(Q, (2, 2)))


def test_budget_is_enforced():
    Q, d, th = family_moduli(F, 4, (3, 3), 1)
    clear_cache()
    with pytest.raises(BudgetExceeded):
        moduli_count(Q, d, th, budget=5)


def test_quiver_json_round_trip():
    Q, _, _ = family_moduli(F, 2, (1, 2), 2)
    assert Quiver.from_json(Q.to_json()) == Q
    with pytest.raises(ValueError):
        Quiver(["a", "b"], [("a", "b", 1), ("b", "a", 1)])


def test_reflection_at_sink():
    Q = K(3)
    assert reflect_dim(Q, (1, 1), 1) == (1, 2)


# DT invariants ---------------------------------------------------------------

def test_projective_space_poly():
    assert projective_space_poly(3) == DtInvariant(Laurent({-2: 1, 0: 1, 2: 1}, var="v"))


def test_stack_matches_moduli_for_coprime():
    Q, d, th = family_moduli(C, 3, (2,))
    assert is_coprime(th, d)
    assert stack_dt_invariant(Q, d, th) == dt_invariant(Q, d, th)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_kronecker_diagonal(d):
    # on the slope-zero ray of K_2 only the primitive vector carries an invariant, P^1 up to sign
    Q = K(2)
    omega = stack_dt_invariant(Q, (d, d), (1, -1))
    if d == 1:
        assert omega in (projective_space_poly(2), -projective_space_poly(2))
    else:
        assert omega.is_zero()


# plethysm --------------------------------------------------------------------

terms = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(any),
    st.dictionaries(st.integers(-2, 2), st.integers(-3, 3), max_size=2).map(lambda c: Laurent(c, var="v")),
    max_size=4,
)


@given(terms, st.sampled_from(ADAMS_MODES))
@settings(max_examples=40, deadline=None)
def test_plethystic_log_inverts_exp(t, mode):
    f = MultiSeries(t, 2, 4)
    g = plethystic_log(plethystic_exp(f, mode), mode)
    assert (g - f).is_zero()


def test_plethystic_exp_needs_zero_constant():
    with pytest.raises(NonzeroConstantTerm):
        plethystic_exp(MultiSeries.one(1, 3))


def test_plethystic_exp_geometric():
    # Exp(x) = 1/(1-x)
    e = plethystic_exp(MultiSeries({(1,): 1}, 1, 5))
    assert all(e.terms[(k,)] == Laurent.const(1, var="v") for k in range(6))


# key relation -----------------------------------------------------------------

def test_key_relation_adopted_convention():
    conventions = None
    for fam in (L, C, "K2"):
        r = verify_framed_identity(*keyrel_case(fam, 2))
        conventions = set(r["matching"]) if conventions is None else conventions & set(r["matching"])
    assert conventions == {XAndV}


def test_kronecker_closed_form_second_order():
    r = closed_form_check(3)
    assert r["oracle"] == r["plethystic"]
    assert r["table_deviates_at_order"] == 2


# q-DT recursion ---------------------------------------------------------------

@pytest.mark.parametrize("family,pair,d", [(L, P2Line(), k) for k in range(1, 5)] + [(C, P2Conic(), k) for k in range(1, 5)])
def test_qdt_recursion_matches_series(family, pair, d):
    z = qdt_recursion(family, d)
    f = compute_series(pair, CurveClass((d,)))
    from lbps.bridges import gw_side

    assert z == gw_side(pair, CurveClass((d,)))
    assert f is not None


def test_qdt_recursion_needs_seeds():
    with pytest.raises(MissingSeed):
        qdt_recursion(F, (1, 2), n=1, seeds={})


# theorem sweeps (small) --------------------------------------------------------

@pytest.mark.parametrize("case", duality_cases(4, 4, 2), ids=str)
def test_duality_small(case):
    assert check_duality(*case)["status"] in ("ok", "unsupported")
    assert check_duality(*case)["status"] != "fail"


@pytest.mark.parametrize("case", framing_cases(3, 3, 1), ids=str)
def test_framing_small(case):
    assert check_framing(*case)["status"] != "fail"


@pytest.mark.parametrize("m,d", [(2, 2), (3, 3), (4, 2)])
def test_smallres_line_family(m, d):
    assert check_smallres(1, L, 0, m, (d,))["status"] == "ok"


def test_framed_family_scalings_differ():
    a = framed_family(L, 3, (3,), scaling="integral")
    b = framed_family(L, 3, (3,), scaling="unit-left")
    assert a[0] == b[0] and a[1] == b[1]
    with pytest.raises(ValueError):
        framed_family(L, 3, (3,), scaling="bogus")
