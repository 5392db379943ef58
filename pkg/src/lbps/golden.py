"""Reference tables shipped as text fixtures, and the check that recomputes them.

Each fixture line is "class | value": a q-expression for series tables, the
BPS vector n_0 n_1 ... for BPS tables.  A class written "d,d+1" stands for
the whole family and is expanded for d = 0..FAMILY_RANGE-1.
"""

from importlib import resources

from .exactalg.qparse import parse_q_expression
from .exactalg.spoly import laurent_to_s_form
from .geometry import intersect_Gamma, parse_class, parse_pair
from .gwrec.engine import compute_series

TABLE_FILES = (
    "p2line_series", "p2line_bps", "p2conic_series", "p2conic_bps",
    "f0_series", "f0_bps", "f1_series", "f1_bps", "f2_series", "f2_bps",
)
FAMILY_RANGE = 6


def _read(name):
    return resources.files("lbps.data").joinpath("golden", f"{name}.txt").read_text()


def load_table(name):
    """[(pair, class, kind, raw value)] for one fixture; kind is "series" or "bps"."""
    pair = None
    kind = "series" if name.endswith("series") else "bps"
    rows = []
    for line in _read(name).splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.startswith("# pair:"):
                pair = parse_pair(line.split(":", 1)[1])
            continue
        ctext, value = (x.strip() for x in line.split("|", 1))
        if ctext == "d,d+1":
            for d in range(FAMILY_RANGE):
                rows.append((pair, parse_class(pair, f"{d},{d + 1}"), kind, value))
        else:
            rows.append((pair, parse_class(pair, ctext), kind, value))
    return rows


def load_errata():
    """{(fixture name, class text)} of cells known to carry a sign misprint."""
    out = set()
    for line in _read("errata").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            name, ctext = (x.strip() for x in line.split("|", 1))
            out.add((name, ctext))
    return out


def load_all():
    return {name: load_table(name) for name in TABLE_FILES}


def check_row(pair, beta, kind, value, table=None):
    """Report dict comparing one fixture cell with the engine."""
    f = compute_series(pair, beta, table)
    if kind == "bps":
        want = [int(x) for x in value.split()]
        ok = list(f.poly.coeffs) == want
        lhs, rhs = " ".join(map(str, f.poly.coeffs)), value
    else:
        parsed = laurent_to_s_form(parse_q_expression(value), intersect_Gamma(pair, beta) - 2)
        ok = parsed == f
        lhs, rhs = " ".join(map(str, f.poly.coeffs)), " ".join(map(str, parsed.poly.coeffs))
    return {"check": f"table-{kind}", "pair": str(pair), "class": str(beta),
            "status": "ok" if ok else "fail", "lhs": lhs, "rhs": rhs}


def verify_tables(table=None):
    """Every fixture cell against the engine.

    A listed erratum gets status "erratum" only if the cell is off by exactly
    an overall sign and the BPS fixture row for the same class matches; any
    other disagreement stays a failure.
    """
    errata = load_errata()
    bps_rows = {}
    for name in TABLE_FILES:
        if name.endswith("bps"):
            for pair, beta, _, value in load_table(name):
                bps_rows[(str(pair), str(beta))] = value
    out = []
    for name in TABLE_FILES:
        for pair, beta, kind, value in load_table(name):
            rep = check_row(pair, beta, kind, value, table)
            if rep["status"] == "fail" and (name, str(beta)) in errata:
                flipped = " ".join(str(-int(x)) for x in rep["rhs"].split())
                bps = bps_rows.get((str(pair), str(beta)))
                if flipped == rep["lhs"] and bps == rep["lhs"]:
                    rep["status"] = "erratum"
            out.append(rep)
    return out
