"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 invalid input,
3 the quiver oracle cannot answer (non-coprime case or budget exceeded).
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .errors import LbpsError, UnsupportedOracle, ZeroSeries
from .exactalg.qparse import format_bps_q
from .exactalg.spoly import h_expand
from .geometry import (
    classes_up_to,
    deformation_reduce,
    intersect_D,
    intersect_Gamma,
    parse_class,
    parse_pair,
)
from .gwrec.engine import SeriesTable, compute_series
from .gwrec.initial import KRONECKER2_CONVENTIONS, TABLE
from .quiverdt.hn import DEFAULT_BUDGET

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_ORACLE = 0, 1, 2, 3

SUITES = ("paper-tables", "bridges", "virasoro", "duality", "framed", "smallres", "castelnuovo", "keyrel", "nef")


class InputError(Exception):
    pass


def _parse_pair_class(args):
    try:
        pair = parse_pair(args.pair)
        beta = parse_class(pair, getattr(args, "class_"))
    except (ValueError, LbpsError) as exc:
        raise InputError(str(exc)) from None
    return pair, beta


def _table(args):
    return SeriesTable(getattr(args, "convention", TABLE), budget=args.budget)


def _emit(out, text):
    out.write(text if text.endswith("\n") else text + "\n")


def _map(fn, items, jobs):
    if jobs and jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


# series / bps ---------------------------------------------------------------

def cmd_series(args, out):
    pair, beta = _parse_pair_class(args)
    table = _table(args)
    f = compute_series(pair, beta, table)
    if args.format == "bps":
        _emit(out, " ".join(str(c) for c in f.poly.coeffs) or "0")
    elif args.format == "q":
        _emit(out, format_bps_q(f))
    else:
        gmax = args.gmax if args.gmax is not None else max(f.poly.degree(), 0)
        _emit(out, " ".join(str(x) for x in h_expand(f, gmax)))
    table.save()
    return EXIT_OK


def cmd_bps(args, out):
    from .bridges.relative import castelnuovo_check

    pair, beta = _parse_pair_class(args)
    table = _table(args)
    f = compute_series(pair, beta, table)
    rep = {"pair": str(pair), "class": str(beta), "bps": list(f.poly.coeffs)}
    try:
        rep["castelnuovo"] = castelnuovo_check(pair, beta, table)
    except ZeroSeries:
        rep["castelnuovo"] = None
    _emit(out, json.dumps(rep, sort_keys=True))
    table.save()
    ok = rep["castelnuovo"] is None or rep["castelnuovo"]["ok"]
    return EXIT_OK if ok else EXIT_FAIL


# table ---------------------------------------------------------------------

def _row(job):
    ptext, ctext, convention, budget = job
    pair = parse_pair(ptext)
    beta = parse_class(pair, ctext)
    f = compute_series(pair, beta, SeriesTable(convention, cache_dir="", budget=budget))
    p, b = deformation_reduce(pair, beta)
    return {
        "pair": ptext,
        "class": ctext,
        "gamma_beta": intersect_Gamma(p, b),
        "d_beta": intersect_D(p, b),
        "offset": f.offset,
        "bps": list(f.poly.coeffs),
        "q": format_bps_q(f),
    }


def _latex_q(text):
    return text.replace("*", "")


def render_table(rows, fmt):
    if fmt == "json":
        return json.dumps(rows, indent=1, sort_keys=True)
    if fmt == "csv":
        width = max([len(r["bps"]) for r in rows] + [1])
        head = "pair,class,gamma_beta,d_beta," + ",".join(f"n_{g}" for g in range(width))
        lines = [head]
        for r in rows:
            vals = r["bps"] + [0] * (width - len(r["bps"]))
            lines.append(f"{r['pair']},\"{r['class']}\",{r['gamma_beta']},{r['d_beta']}," + ",".join(map(str, vals)))
        return "\n".join(lines)
    # latex: one series table and one BPS table
    width = max([len(r["bps"]) for r in rows] + [1])
    lines = [r"\begin{tabular}{|c|c|}", r"\hline $\beta$ & $F_\beta$\\"]
    for r in rows:
        lines.append(rf"\hline $({r['class']})$ & $" + _latex_q(r["q"]) + r"$\\")
    lines += [r"\hline", r"\end{tabular}", ""]
    lines.append(r"\begin{tabular}{|l|" + "c|" * width + "}")
    lines.append(r"\hline $\beta$ & " + " & ".join(f"${g}$" for g in range(width)) + r"\\")
    for r in rows:
        vals = r["bps"] + [0] * (width - len(r["bps"]))
        lines.append(rf"\hline $({r['class']})$ & " + " & ".join(f"${v}$" for v in vals) + r"\\")
    lines += [r"\hline", r"\end{tabular}"]
    return "\n".join(lines)


def cmd_table(args, out):
    try:
        pair = parse_pair(args.pair)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.max_gamma < 1:
        raise InputError("--max-gamma must be >= 1")
    classes = classes_up_to(pair, args.max_gamma, args.max_coord)
    jobs = [(str(pair), str(b), args.convention, args.budget) for b in classes]
    rows = _map(_row, jobs, args.jobs)
    _emit(out, render_table(rows, args.format))
    return EXIT_OK


# verify --------------------------------------------------------------------

def _bridge_job(job):
    from .bridges.quiver_checks import bridge_report

    ptext, ctext, convention, budget, max_dim = job
    pair = parse_pair(ptext)
    beta = parse_class(pair, ctext)
    return bridge_report(pair, beta, SeriesTable(convention, cache_dir="", budget=budget), max_dim, budget)


def _suite_reports(args):
    """(list of report dicts, overall ok)."""
    suite = args.suite
    table = _table(args)
    if suite == "paper-tables":
        from .golden import verify_tables

        reps = verify_tables(table)
        return reps, all(r["status"] != "fail" for r in reps)
    if suite == "bridges":
        from .bridges.quiver_checks import bridge_classes, section6_pairs

        max_gamma = args.max if args.max is not None else 8
        jobs = [(str(p), str(b), args.convention, args.budget, args.max_dim)
                for p in section6_pairs() for b in bridge_classes(p, max_gamma, args.max_dim)]
        reps = [r for chunk in _map(_bridge_job, jobs, args.jobs) for r in chunk]
        return reps, all(r["status"] != "fail" for r in reps)
    if suite == "virasoro":
        from .bridges.genus1 import verify_genus1

        rep = verify_genus1(args.max if args.max is not None else 19)
        return [rep], rep["ok"]
    if suite in ("duality", "framed", "smallres"):
        from .quiverdt.theorems import sweep

        m = args.max if args.max is not None else 6
        reps = sweep(suite, m_max=m, d_max=m, n_max=3, budget=args.budget)
        return reps, all(r["status"] != "fail" for r in reps)
    if suite == "castelnuovo":
        from .bridges.quiver_checks import bridge_classes, section6_pairs
        from .bridges.relative import castelnuovo_check
        from .golden import load_all

        seen = set()
        for rows in load_all().values():
            seen.update((p, b) for p, b, _, _ in rows)
        for p in section6_pairs():
            seen.update((p, b) for b in bridge_classes(p, args.max if args.max is not None else 8, args.max_dim))
        reps = []
        for p, b in sorted(seen, key=lambda t: (str(t[0]), t[1])):
            try:
                c = castelnuovo_check(p, b, table)
            except ZeroSeries:
                continue
            reps.append({"check": "castelnuovo", "pair": str(p), "class": str(b),
                         "status": "ok" if c["ok"] else "fail",
                         "lhs": f"g={c['g_max']} top={c['top']}", "rhs": f"g={c['expected_g_max']}"})
        return reps, all(r["status"] == "ok" for r in reps)
    if suite == "keyrel":
        from .quiverdt.keyrel import closed_form_check, keyrel_case, verify_framed_identity

        T = args.max if args.max is not None else 3
        reps, modes = [], None
        for fam in ("L", "C", "K2"):
            r = verify_framed_identity(*keyrel_case(fam, T), budget=args.budget)
            reps.append({"check": "keyrel", "family": fam, "truncation": T, "matching": r["matching"]})
            modes = set(r["matching"]) if modes is None else modes & set(r["matching"])
        cf = closed_form_check(T + 1, args.budget)
        cf["check"] = "kronecker2-closed-form"
        reps.append(cf)
        reps.append({"check": "keyrel-convention", "matching_all": sorted(modes)})
        return reps, len(modes) == 1
    if suite == "nef":
        from .bridges.nef import nef_counterexample

        rep = nef_counterexample(args.max if args.max is not None else 8)
        return [rep], rep["ok"]
    raise InputError(f"unknown suite {suite!r}")


def cmd_verify(args, out):
    reps, ok = _suite_reports(args)
    for r in reps:
        _emit(out, json.dumps(r, sort_keys=True))
    _emit(out, json.dumps({"suite": args.suite, "status": "ok" if ok else "fail"}))
    return EXIT_OK if ok else EXIT_FAIL


# quiver --------------------------------------------------------------------

def cmd_quiver(args, out):
    from .quiverdt.dt import dt_invariant
    from .quiverdt.hn import hn_counting, moduli_count
    from .quiverdt.quiver import Quiver, Stability, antiattractor, parse_vector

    try:
        with open(args.file) as fh:
            Q = Quiver.from_json(json.load(fh))
        d = parse_vector(args.dim)
        Q.check(d)
        if args.theta == "antiattractor":
            theta = antiattractor(Q, d)
        else:
            theta = Stability(parse_vector(args.theta))
            Q.check(theta)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(str(exc)) from None
    if args.what == "count":
        _emit(out, moduli_count(Q, d, theta, budget=args.budget).to_str())
    elif args.what == "hn":
        rf = hn_counting(Q, d, theta, budget=args.budget)
        _emit(out, f"({rf.num.to_str()}) / ({rf.den.to_str()})")
    else:
        _emit(out, dt_invariant(Q, d, theta, args.budget).to_str())
    return EXIT_OK


# argument parsing ----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser():
    p = _Parser(prog="lbps", description="All-genus local GW series, BPS numbers and quiver DT invariants.")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cap on HN recursion steps")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_conv(sp):
        sp.add_argument("--convention", choices=KRONECKER2_CONVENTIONS, default=TABLE,
                        help="initial data for F_2 classes (d, d+2)")

    s = sub.add_parser("series", help="one generating series")
    s.add_argument("--pair", required=True)
    s.add_argument("--class", dest="class_", required=True)
    s.add_argument("--format", choices=("bps", "q", "gw"), default="bps")
    s.add_argument("--gmax", type=int)
    add_conv(s)

    t = sub.add_parser("table", help="all classes up to a Gamma.beta bound")
    t.add_argument("--pair", required=True)
    t.add_argument("--max-gamma", type=int, required=True)
    t.add_argument("--max-coord", type=int, default=None, help="cap on d1 for Hirzebruch pairs")
    t.add_argument("--format", choices=("csv", "json", "latex"), default="csv")
    t.add_argument("--jobs", type=int, default=1)
    add_conv(t)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--max", type=int, default=None)
    v.add_argument("--max-dim", type=int, default=12)
    v.add_argument("--jobs", type=int, default=1)
    add_conv(v)

    q = sub.add_parser("quiver", help="HN oracle on a quiver given as JSON")
    q.add_argument("--file", required=True)
    q.add_argument("--dim", required=True)
    q.add_argument("--theta", default="antiattractor")
    q.add_argument("--what", choices=("count", "dt", "hn"), default="count")

    b = sub.add_parser("bps", help="BPS vector with the Castelnuovo report")
    b.add_argument("--pair", required=True)
    b.add_argument("--class", dest="class_", required=True)
    add_conv(b)
    return p


COMMANDS = {"series": cmd_series, "table": cmd_table, "verify": cmd_verify, "quiver": cmd_quiver, "bps": cmd_bps}


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.budget < 1:
            raise InputError("--budget must be positive")
        if getattr(args, "jobs", 1) < 1:
            raise InputError("--jobs must be >= 1")
        return COMMANDS[args.command](args, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except UnsupportedOracle as exc:
        err.write(f"unsupported: {exc}\n")
        return EXIT_ORACLE
    except LbpsError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
