"""The eight acceptance criteria.  Each test records one PASS/FAIL line.

All comparisons are exact (zero tolerance); the only pinned tolerances are
wall-clock limits.
"""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from lbps.bridges import bridge_classes, bridge_sweep, castelnuovo_check, nef_counterexample, section6_pairs
from lbps.bridges.genus1 import genus1_virasoro, genus1_wdvv
from lbps.errors import ZeroSeries
from lbps.geometry import CurveClass, Hirzebruch, P2Line
from lbps.golden import load_all, verify_tables
from lbps.gwrec import PLETHYSTIC, TABLE, SeriesTable, compute_series
from lbps.quiverdt import XAndV, closed_form_check, keyrel_case, moduli_count, verify_framed_identity
from lbps.quiverdt.bruteforce import count_stable
from lbps.quiverdt.hn import clear_cache
from lbps.quiverdt.theorems import sweep

from quiver_corpus import small_cases

TIME_TABLES = 5.0
TIME_GENUS1 = 10.0
TIME_BRIDGES = 600.0


def record(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def test_c1_table_reproduction():
    t = time.perf_counter()
    reps = verify_tables(SeriesTable(TABLE, cache_dir=""))
    spot = (
        compute_series(P2Line(), CurveClass((5,))).bps == [5477, -5734, 3031, -970, 190, -21, 1]
        and compute_series(Hirzebruch(1), CurveClass((4, 5))).bps == [729, -1250, 1003, -456, 120, -17, 1]
        and compute_series(Hirzebruch(2), CurveClass((3, 7))).bps == [-422, 832, -750, 374, -106, 16, -1]
    )
    dt = time.perf_counter() - t
    fails = [r for r in reps if r["status"] == "fail"]
    errata = [f"{r['pair']} ({r['class']})" for r in reps if r["status"] == "erratum"]
    ok = not fails and spot and dt < TIME_TABLES
    record(1, ok, f"{len(reps)} cells, {len(fails)} mismatches, sign-misprinted series cells {errata} "
                  f"(BPS rows match), {dt:.2f}s < {TIME_TABLES}s")
    assert not fails and spot
    assert dt < TIME_TABLES


def test_c2_genus1_virasoro():
    genus1_wdvv.cache_clear()
    genus1_virasoro.cache_clear()
    t = time.perf_counter()
    bad = [d for d in range(1, 20) if genus1_wdvv(d) != genus1_virasoro(d)]
    dt = time.perf_counter() - t
    record(2, not bad and dt < TIME_GENUS1, f"wdvv == virasoro for d <= 19, mismatches {bad}, {dt:.2f}s < {TIME_GENUS1}s")
    assert not bad
    assert dt < TIME_GENUS1


def _bridges(convention):
    clear_cache()
    t = time.perf_counter()
    reps = bridge_sweep(max_gamma=8, max_dim=12, table=SeriesTable(convention, cache_dir=""))
    return reps, time.perf_counter() - t


def _summary(reps):
    ok = sum(r["status"] == "ok" for r in reps)
    fails = [f"{r['check']} {r['pair']} ({r['class']})" for r in reps if r["status"] == "fail"]
    return ok, fails


@pytest.mark.xfail(strict=True, reason="the tabulated F_2 (d, d+2) initial data disagree with the quiver oracle "
                                        "from the second order on; see the decisions ledger")
def test_c3_bridges_with_tabulated_initial_data():
    reps, dt = _bridges(TABLE)
    ok, fails = _summary(reps)
    record(3, not fails, f"tabulated initial data: {ok} identities hold, failures {fails}, {dt:.1f}s")
    assert dt < TIME_BRIDGES
    assert not fails


def test_c3_bridges_with_oracle_initial_data():
    reps, dt = _bridges(PLETHYSTIC)
    ok, fails = _summary(reps)
    record("3b", not fails and dt < TIME_BRIDGES,
           f"oracle-consistent Kronecker initial data: {ok} identities hold, failures {fails}, {dt:.1f}s")
    assert not fails
    assert dt < TIME_BRIDGES


def test_c4_quiver_theorem_sweeps():
    clear_cache()
    t = time.perf_counter()
    parts = {}
    for kind in ("duality", "framed", "smallres"):
        reps = sweep(kind, m_max=6, d_max=6, n_max=3)
        parts[kind] = (sum(r["status"] == "ok" for r in reps),
                       sum(r["status"] == "unsupported" for r in reps),
                       [(r["case"], r["params"]) for r in reps if r["status"] == "fail"])
    dt = time.perf_counter() - t
    fails = {k: v[2] for k, v in parts.items() if v[2]}
    detail = ", ".join(f"{k}: {v[0]} ok / {v[1]} unsupported" for k, v in parts.items())
    record(4, not fails, f"{detail}, failures {fails}, {dt:.0f}s")
    assert not fails


def test_c5_castelnuovo():
    seen = set()
    for rows in load_all().values():
        seen.update((p, b) for p, b, _, _ in rows)
    for p in section6_pairs():
        seen.update((p, b) for b in bridge_classes(p, 8, 12))
    bad, checked = [], 0
    for p, b in sorted(seen, key=lambda x: (str(x[0]), x[1])):
        try:
            r = castelnuovo_check(p, b)
        except ZeroSeries:
            continue
        checked += 1
        if not r["ok"]:
            bad.append((str(p), str(b), r))
    record(5, not bad, f"{checked} nonzero series, genus bound and top sign violations {bad}")
    assert not bad


def test_c6_oracle_soundness():
    cases = small_cases(4)
    bad = []
    t = time.perf_counter()
    for label, Q, d, theta in cases:
        poly = moduli_count(Q, d, theta)
        for p in (2, 3):
            _, classes = count_stable(Q, d, theta, p)
            if classes != poly.evaluate(p):
                bad.append((label, p))
    dt = time.perf_counter() - t
    record(6, not bad, f"{len(cases)} quiver/dimension pairs (total dim <= 4) over F_2 and F_3, "
                       f"mismatches {bad}, {dt:.1f}s")
    assert not bad


def test_c7_nef_counterexample():
    r = nef_counterexample(8)
    record(7, r["ok"], f"modified N(C1+nf) = 1 for n = 1..8: {r['modified_constant']}; "
                       f"unmodified differs at {r['unmodified_differs_at'][:3]}")
    assert r["ok"]


def test_c8_key_relation():
    matching = {}
    for fam in ("L", "K2", "C"):
        matching[fam] = set(verify_framed_identity(*keyrel_case(fam, 3))["matching"])
    common = set.intersection(*matching.values())
    cf = closed_form_check(4)
    ok = common == {XAndV} and cf["oracle"] == cf["plethystic"] and cf["table_deviates_at_order"] == 2
    record(8, ok, "conventions matching the oracle: " + ", ".join(f"{k}: {sorted(v)}" for k, v in matching.items())
           + f"; adopted {sorted(common)}; (1-2x) closed form deviates at x^{cf['table_deviates_at_order']}, "
             f"(1-x)^2 agrees through x^4")
    assert common == {XAndV}
    assert cf["oracle"] == cf["plethystic"]
    assert cf["table_deviates_at_order"] == 2
