import io
import json
import subprocess
import sys

import pytest

from lbps.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, EXIT_ORACLE, run
from lbps.quiverdt import family_quiver
from lbps.quiverdt.hn import clear_cache


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_series_bps():
    assert call("series", "--pair", "p2:line", "--class", "5", "--format", "bps") == \
        (EXIT_OK, "5477 -5734 3031 -970 190 -21 1\n", "")


def test_series_q_form():
    code, out, _ = call("series", "--pair", "p2:conic", "--class", "3", "--format", "q")
    assert code == EXIT_OK and out.strip() == "(q-1)(q^2+2q+1)/(-q)^{3/2}"


def test_series_gw():
    code, out, _ = call("series", "--pair", "p2:line", "--class", "2", "--format", "gw", "--gmax", "1")
    assert code == EXIT_OK and out.split() == ["-1", "1/12"]


@pytest.mark.parametrize("argv", [
    ("series", "--pair", "p3", "--class", "1"),
    ("series", "--pair", "p2:line", "--class", "1,2"),
    ("series", "--pair", "p2:line", "--class", "x"),
    ("series", "--pair", "f2", "--class", "1,0"),
    ("series", "--pair", "p2:line", "--class", "1", "--format", "tex"),
    ("table", "--pair", "f0", "--max-gamma", "0"),
    ("verify", "--suite", "nothing"),
    ("nonsense",),
    ("--budget", "0", "series", "--pair", "p2:line", "--class", "1"),
])
def test_invalid_input_exits_2(argv):
    code, out, err = call(*argv)
    assert code == EXIT_INPUT and out == "" and err.startswith("error")


def test_table_csv_schema():
    code, out, _ = call("table", "--pair", "f1", "--max-gamma", "3", "--max-coord", "2")
    lines = out.strip().splitlines()
    assert lines[0].startswith("pair,class,gamma_beta,d_beta,n_0")
    assert code == EXIT_OK and len(lines) > 3


def test_table_json_and_determinism():
    a = call("table", "--pair", "p2:conic", "--max-gamma", "5", "--format", "json")
    b = call("table", "--pair", "p2:conic", "--max-gamma", "5", "--format", "json", "--jobs", "2")
    assert a == b
    rows = json.loads(a[1])
    assert [r["class"] for r in rows] == ["1", "2", "3", "4", "5"]
    assert rows[2]["q"] == "(q-1)(q^2+2q+1)/(-q)^{3/2}"


def test_table_latex():
    code, out, _ = call("table", "--pair", "p2:line", "--max-gamma", "6", "--format", "latex")
    assert code == EXIT_OK and out.count(r"\begin{tabular}") == 2 and "$(3)$" in out


def test_bps_report():
    code, out, _ = call("bps", "--pair", "f2", "--class", "5,7")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["bps"] == [-57, 64, -37, 10, -1] and rep["castelnuovo"]["ok"]


def test_verify_virasoro():
    code, out, _ = call("verify", "--suite", "virasoro", "--max", "19")
    assert code == EXIT_OK
    assert json.loads(out.strip().splitlines()[-1]) == {"suite": "virasoro", "status": "ok"}


def test_verify_paper_tables():
    code, out, _ = call("verify", "--suite", "paper-tables")
    assert code == EXIT_OK
    rows = [json.loads(x) for x in out.strip().splitlines()[:-1]]
    assert sum(r["status"] == "erratum" for r in rows) == 2


def test_verify_nef():
    assert call("verify", "--suite", "nef")[0] == EXIT_OK


def test_verify_keyrel():
    code, out, _ = call("verify", "--suite", "keyrel", "--max", "2")
    assert code == EXIT_OK and '"matching_all": ["XAndV"]' in out


def test_quiver_count_and_dt(tmp_path):
    f = tmp_path / "k3.json"
    f.write_text(json.dumps({"vertices": ["a", "b"], "arrows": [["a", "b", 3]]}))
    assert call("quiver", "--file", str(f), "--dim", "1,2")[:2] == (EXIT_OK, "q^2 + q + 1\n")
    assert call("quiver", "--file", str(f), "--dim", "1,2", "--what", "dt")[:2] == (EXIT_OK, "v^2 + 1 + v^-2\n")


def test_quiver_not_coprime_exits_3(tmp_path):
    f = tmp_path / "k2.json"
    f.write_text(json.dumps({"vertices": ["a", "b"], "arrows": [["a", "b", 2]]}))
    assert call("quiver", "--file", str(f), "--dim", "2,2")[0] == EXIT_ORACLE


def test_quiver_budget_exits_3(tmp_path):
    f = tmp_path / "f.json"
    f.write_text(json.dumps(family_quiver("F", 4, 1).to_json()))
    clear_cache()
    code, _, err = call("--budget", "3", "quiver", "--file", str(f), "--dim", "1,1,1,1,3,3")
    assert code == EXIT_ORACLE and err.startswith("unsupported")


def test_quiver_bad_file(tmp_path):
    assert call("quiver", "--file", str(tmp_path / "missing.json"), "--dim", "1")[0] == EXIT_INPUT
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"vertices": ["a"], "arrows": []}))
    assert call("quiver", "--file", str(f), "--dim", "1,2")[0] == EXIT_INPUT


def test_cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("LBPS_CACHE_DIR", str(tmp_path))
    assert call("series", "--pair", "p2:line", "--class", "4")[0] == EXIT_OK
    assert any(p.name.endswith(".json") for p in tmp_path.iterdir())
    assert call("series", "--pair", "p2:line", "--class", "4")[1] == "-138 66 -13 1\n"


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "lbps", "series", "--pair", "f1", "--class", "4,5"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0 and r.stdout == "729 -1250 1003 -456 120 -17 1\n"
