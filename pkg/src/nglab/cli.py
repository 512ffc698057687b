"""nglab command line.

Usage:
    nglab analyze --g6 'Dhc'
    nglab analyze --file graphs.g6
    nglab enumerate --n 5 --filter ng-not-ngd
    nglab verify --max-n 6
    nglab verify --max-n 7 --recognizer-only
    nglab tables

Exit codes: 0 success, 1 verification counterexample, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import oracles
from .enumeration import MAX_ENUM_N, isomorphism_class_keys
from .errors import GuardError, NGLabError
from .generators import clique_plus_independent, complete_multipartite, cycle, write_fixture_catalog
from .graph import Graph, complement
from .graph6 import emit_graph6, parse_graph6, read_graph6_file
from .ngd import DEFAULT_ORACLE_N, decide_ngd, ngd_oracle_values
from .recognition import recognize_ng
from .verify import run_verification

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT = 0, 1, 2
FILTERS = ("all", "ng", "ngd", "ng-not-ngd", "ngd-not-ng")
ENV_ORACLE_N = "NGLAB_MAX_ORACLE_N"


def default_oracle_n() -> int:
    raw = os.environ.get(ENV_ORACLE_N)
    return int(raw) if raw else DEFAULT_ORACLE_N


def analyze_graph(g: Graph, max_oracle_n: int = DEFAULT_ORACLE_N) -> dict:
    """Recognition, NGD verdict and (within the guard) an exact-search cross-check."""
    cls = recognize_ng(g)
    out = {
        "n": g.n,
        "graph6": emit_graph6(g),
        "is_ng": cls.is_ng,
        "types": sorted(cls.types),
        "chi": cls.k,
        "chi_complement": cls.chi_complement,
    }
    omitted = []
    if not cls.is_ng:
        if g.n <= oracles.CHI_MAX_N:
            out["chi"] = oracles.chromatic_number(g)
            out["chi_complement"] = oracles.chromatic_number(complement(g))
        else:
            omitted += ["chi", "chi_complement"]

    report = None
    if g.n == 0:
        omitted.append("is_ngd")
    else:
        try:
            report = decide_ngd(g, max_oracle_n=max_oracle_n, cls=cls)
        except GuardError as exc:
            omitted.append(f"is_ngd ({exc})")
    fields = ("is_ngd", "method", "a", "b", "l", "m", "x", "y", "D", "chi_d", "chi_d_complement",
              "params_of", "criterion")
    data = report.to_dict() if report else {}
    for name in fields:
        out[name] = data.get(name)

    out["oracle_checked"] = False
    if 0 < g.n <= max_oracle_n:
        d, chi_d, chi_d_bar = ngd_oracle_values(g, max_n=max(max_oracle_n, oracles.DIST_MAX_N))
        oracle_ngd = chi_d + chi_d_bar == g.n + d
        agrees = (
            (report is None or report.is_ngd == oracle_ngd)
            and out["D"] in (None, d)
            and out["chi_d"] in (None, chi_d)
            and out["chi_d_complement"] in (None, chi_d_bar)
        )
        if report is None:
            out["is_ngd"] = oracle_ngd
        out.update(D=d, chi_d=chi_d, chi_d_complement=chi_d_bar, oracle_checked=True, oracle_agrees=agrees)
    elif g.n > max_oracle_n:
        omitted.append("oracle cross-check (n above --max-oracle-n)")
    if omitted:
        out["omitted"] = omitted
    return out


def _analyze_key(args: tuple[int, int, int]) -> dict:
    key, n, max_oracle_n = args
    return analyze_graph(Graph.from_key(key, n), max_oracle_n)


def _keep(rep: dict, flt: str) -> bool:
    ng, ngd = rep["is_ng"], rep["is_ngd"]
    return {
        "all": True,
        "ng": ng,
        "ngd": ngd is True,
        "ng-not-ngd": ng and ngd is False,
        "ngd-not-ng": (not ng) and ngd is True,
    }[flt]


def enumerate_reports(n: int, flt: str = "all", jobs: int = 1, max_oracle_n: int = DEFAULT_ORACLE_N):
    """Reports for one representative per isomorphism class, in canonical order."""
    if flt not in FILTERS:
        raise ValueError(f"unknown filter {flt!r}")
    if not 0 <= n <= MAX_ENUM_N:
        raise GuardError("enumerate", n, MAX_ENUM_N)
    if flt in ("ngd", "ngd-not-ng") and n > max_oracle_n:
        raise GuardError(f"enumerate --filter {flt}", n, max_oracle_n)
    tasks = [(k, n, max_oracle_n) for k in isomorphism_class_keys(n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = pool.map(_analyze_key, tasks, chunksize=max(1, len(tasks) // (4 * jobs)))
            yield from (r for r in reports if _keep(r, flt))
    else:
        for task in tasks:
            rep = _analyze_key(task)
            if _keep(rep, flt):
                yield rep


# ------------------------------------------------------------------ tables


def table1_rows() -> list[dict]:
    cases = [(f"K_{n}", complete_multipartite([1] * n), (n, n, 2 * n, n * n, n)) for n in range(1, 7)]
    q = 2
    cases.append(("K_{2,2}", complete_multipartite([q] * q), (q * q, q + 1, q * q + q + 1, q * q * (q + 1), q + 1)))
    for t in (2, 3, 4):
        cases.append((f"K_{t}+I_{t - 1}", clique_plus_independent(t),
                      (t, 2 * t - 1, 3 * t - 1, (2 * t - 1) * t, t)))
    rows = []
    for name, g, expected in cases:
        d, chi_d, chi_d_bar = ngd_oracle_values(g)
        computed = (chi_d, chi_d_bar, chi_d + chi_d_bar, chi_d * chi_d_bar, d)
        rows.append({"graph": name, "n": g.n, "computed": computed, "expected": expected, "match": computed == expected})
    return rows


def table2_rows() -> list[dict]:
    cases = [
        ("K_{3,1,1}", complete_multipartite((3, 1, 1)), (True, True)),
        ("K_{3,2}", complete_multipartite((3, 2)), (False, True)),
        ("C_5", cycle(5), (True, False)),
        ("C_7", cycle(7), (False, False)),
    ]
    rows = []
    for name, g, expected in cases:
        rep = analyze_graph(g)
        computed = (rep["is_ng"], rep["is_ngd"])
        rows.append({"graph": name, "computed": computed, "expected": expected, "match": computed == expected})
    return rows


def format_tables() -> str:
    yn = {True: "yes", False: "no"}
    lines = ["chi_D, chi_D', sum, product, D   (computed | expected)"]
    for r in table1_rows():
        lines.append(f"{r['graph']:<10} n={r['n']:<2} {str(r['computed']):<22} | {str(r['expected']):<22} "
                     f"{'ok' if r['match'] else 'MISMATCH'}")
    lines += ["", "NG-graph, NGD-graph   (computed | expected)"]
    for r in table2_rows():
        comp = " ".join(yn[v] for v in r["computed"])
        exp = " ".join(yn[v] for v in r["expected"])
        lines.append(f"{r['graph']:<10} {comp:<8} | {exp:<8} {'ok' if r['match'] else 'MISMATCH'}")
    return "\n".join(lines)


# --------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nglab", description=__doc__.split("\n")[0],
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--max-oracle-n", type=int, default=None,
                        help=f"largest n for exponential searches (default {DEFAULT_ORACLE_N}, env {ENV_ORACLE_N})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze graphs given in graph6")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", help="a single graph6 string")
    src.add_argument("--file", help="file with one graph6 string per line")

    p = sub.add_parser("enumerate", help="report every isomorphism class on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", choices=FILTERS, default="all")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("verify", help="run the invariant suites exhaustively")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--recognizer-only", action="store_true",
                   help="only recognizer vs exact chi (allows --max-n 7, sampled)")

    sub.add_parser("tables", help="recompute the two reference tables")

    p = sub.add_parser("fixtures", help="write the named fixture catalog (graph6 + JSON manifest)")
    p.add_argument("directory")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        max_oracle_n = args.max_oracle_n if args.max_oracle_n is not None else default_oracle_n()
    except ValueError:
        print(f"error: {ENV_ORACLE_N} must be an integer", file=sys.stderr)
        return EXIT_INPUT

    try:
        if args.command == "analyze":
            graphs = [parse_graph6(args.g6)] if args.g6 else read_graph6_file(args.file)
            for g in graphs:
                print(json.dumps(analyze_graph(g, max_oracle_n)))
            return EXIT_OK

        if args.command == "enumerate":
            for rep in enumerate_reports(args.n, args.filter, max(1, args.jobs), max_oracle_n):
                print(json.dumps(rep))
            return EXIT_OK

        if args.command == "verify":
            start = time.perf_counter()
            report = run_verification(args.max_n, recognizer_only=args.recognizer_only)
            doc = {"max_n": args.max_n, "mode": "recognizer-only" if args.recognizer_only else "full",
                   **report.to_dict(), "seconds": round(time.perf_counter() - start, 3)}
            print(json.dumps(doc, indent=2))
            return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE

        if args.command == "tables":
            print(format_tables())
            return EXIT_OK

        if args.command == "fixtures":
            print(write_fixture_catalog(args.directory))
            return EXIT_OK
    except (NGLabError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
