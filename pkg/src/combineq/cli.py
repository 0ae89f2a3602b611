"""Command-line front end.

Exit status: 0 when every check passes (expected witnesses allowed), 1 on an
unexpected counterexample, 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .boolean_lattice import scd_inductive, scd_parenthesization
from .characters import kronecker, mn_character
from .contingency import Margins, count_tables
from .core import binomial, euler_number, fibonacci, parse_partition, parse_permutation
from .gaussian import c_difference, gaussian_binomial, p_box, partition_function
from .graphs import (
    FreeMatroid,
    Graph,
    UniformMatroid,
    graphic_matroid,
    independent_count,
    independent_counts,
    logconcavity_report,
    matching_count,
    matching_numbers,
    parse_graph,
)
from .harness.config import load_config
from .harness.report import _jsonable
from .harness.suites import run_suite, suite_names
from .harness.trace import INJECTIONS, TraceInputError, trace_injection
from .tableaux import (
    SkewShape,
    hook_inequality_check,
    hook_lengths,
    kostka,
    lr_coefficient,
    naruse_lower_bound,
    rsk,
    syt_count,
    yt_inequalities,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_graph(path: str) -> Graph:
    try:
        return parse_graph(Path(path).read_text())
    except OSError as e:
        raise UsageError(f"cannot read graph file: {e}") from e


def _skew(outer: str, inner: str | None) -> SkewShape:
    if "/" in outer and inner is None:
        outer, inner = outer.split("/", 1)
    return SkewShape(parse_partition(outer), parse_partition(inner or "-"))


def _matroid(args) -> object:
    if args.graph:
        return graphic_matroid(_read_graph(args.graph))
    if args.n is None:
        raise UsageError("matroid needs --graph or --n")
    return FreeMatroid(args.n) if args.rank is None else UniformMatroid(args.n, args.rank)


def _compute(args) -> object:
    q = args.quantity
    P = parse_partition
    if q == "binomial":
        return binomial(args.n, args.k)
    if q == "qbinom":
        return str(gaussian_binomial(args.n, args.k))
    if q == "pbox":
        return p_box(args.n, args.k, args.ell)
    if q == "cdiff":
        return c_difference(args.n, args.k, args.ell)
    if q == "partitions":
        return partition_function(args.n)
    if q == "euler":
        return euler_number(args.n)
    if q == "fibonacci":
        return fibonacci(args.n)
    if q == "f":
        return syt_count(_skew(args.shape, args.inner))
    if q == "hooks":
        return " ".join(f"({i},{j}):{h}" for (i, j), h in sorted(hook_lengths(P(args.shape)).items()))
    if q == "naruse":
        num, den = naruse_lower_bound(_skew(args.outer, args.inner))
        return f"{num}/{den}" if den != 1 else num
    if q == "hook-inequality":
        lhs, rhs, ok = hook_inequality_check(P(args.shape))
        return f"{lhs} <= {rhs}: {ok}"
    if q == "kostka":
        return kostka(P(args.shape), P(args.weight))
    if q == "lr":
        return lr_coefficient(P(args.outer), P(args.inner), P(args.weight))
    if q == "character":
        return mn_character(P(args.shape), P(getattr(args, "class")))
    if q == "kronecker":
        return kronecker(P(args.l1), P(args.l2), P(args.l3))
    if q == "matchings":
        G = _read_graph(args.graph)
        return matching_count(G, args.k) if args.k is not None else " ".join(map(str, matching_numbers(G)))
    if q == "independent":
        M = _matroid(args)
        return independent_count(M, args.k) if args.k is not None else " ".join(map(str, independent_counts(M)))
    if q == "logconcavity":
        rep = logconcavity_report(int(x) for x in args.seq.split(","))
        return f"log-concave: {rep.log_concave}, unimodal: {rep.unimodal}"
    if q == "tables":
        return count_tables(Margins(P(args.rows), P(args.cols)))
    raise UsageError(f"unknown quantity {q!r}")


def _add_compute(sub) -> None:
    p = sub.add_parser("compute", help="compute a single quantity")
    qs = p.add_subparsers(dest="quantity", required=True, metavar="quantity")

    def q(name, help, *flags):
        qp = qs.add_parser(name, help=help)
        for flag, kw in flags:
            qp.add_argument(flag, **kw)
        qp.add_argument("--format", choices=("text", "json"), default="text")
        return qp

    req_int = {"type": int, "required": True}
    req_str = {"required": True}
    q("binomial", "C(n,k)", ("--n", req_int), ("--k", req_int))
    q("qbinom", "Gaussian binomial coefficient", ("--n", req_int), ("--k", req_int))
    q("pbox", "partitions of ell in a k x (n-k) box", ("--n", req_int), ("--k", req_int), ("--ell", req_int))
    q("cdiff", "p(n,k,ell) - p(n,k,ell-1)", ("--n", req_int), ("--k", req_int), ("--ell", req_int))
    q("partitions", "partition function p(n)", ("--n", req_int))
    q("euler", "alternating permutations E_n", ("--n", req_int))
    q("fibonacci", "F_n with F_1 = 1, F_2 = 2", ("--n", req_int))
    q("f", "standard tableaux of a (skew) shape", ("--shape", req_str), ("--inner", {}))
    q("hooks", "hook lengths", ("--shape", req_str))
    q("naruse", "excited-diagram lower bound", ("--outer", req_str), ("--inner", {}))
    q("hook-inequality", "product of hooks vs product of contents", ("--shape", req_str))
    q("kostka", "Kostka number", ("--shape", req_str), ("--weight", req_str))
    q("lr", "Littlewood-Richardson coefficient", ("--outer", req_str), ("--inner", req_str), ("--weight", req_str))
    q("character", "irreducible character value", ("--shape", req_str), ("--class", req_str))
    q("kronecker", "Kronecker coefficient", ("--l1", req_str), ("--l2", req_str), ("--l3", req_str))
    q("matchings", "k-matchings of a graph file", ("--graph", req_str), ("--k", {"type": int}))
    q(
        "independent",
        "independent k-sets of a graphic, free or uniform matroid",
        ("--graph", {}),
        ("--n", {"type": int}),
        ("--rank", {"type": int}),
        ("--k", {"type": int}),
    )
    q("logconcavity", "log-concavity of a comma-separated sequence", ("--seq", req_str))
    q("tables", "contingency tables with given margins", ("--rows", req_str), ("--cols", req_str))


def _add_caps(p) -> None:
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--max-vertices", type=int, dest="max_vertices")
    p.add_argument("--max-N", type=int, dest="max_N")
    p.add_argument("--max-m", type=int, dest="max_m")
    p.add_argument("--format", choices=("text", "json"))
    p.add_argument("--jobs", type=int, dest="parallelism", help="worker processes (overrides COMBINEQ_JOBS)")
    p.add_argument("--timing", action="store_true", default=None, help="include elapsed time in the report")
    p.add_argument("--config", help="flat key = value file; flags override it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="combineq", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"combineq {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    _add_compute(sub)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help=f"one of {', '.join(suite_names())}, or yt")
    v.add_argument("--n", type=int, help="size for 'verify yt'")
    v.add_argument("--k", type=int, help="split for 'verify yt'")
    _add_caps(v)

    i = sub.add_parser("inject", help="trace an explicit injection step by step")
    i.add_argument("which", choices=INJECTIONS)
    i.add_argument("--input", help="textual input; see the trace module for forms")
    i.add_argument("--n", type=int)
    i.add_argument("--k", type=int)
    i.add_argument("--set", help="member list like '1' or '2,4'")
    i.add_argument("--graph", help="graph file")
    i.add_argument("--blue")
    i.add_argument("--green")
    i.add_argument("--perm")

    r = sub.add_parser("report", help="write a JSON report to a file")
    r.add_argument("--out", required=True)
    r.add_argument("--suite", default="all")
    _add_caps(r)

    s = sub.add_parser("scd", help="print a symmetric chain decomposition")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--algo", choices=("paren", "inductive"), default="paren")

    k = sub.add_parser("rsk", help="RSK tableaux of a permutation")
    k.add_argument("--perm", required=True)
    return parser


def _config(args):
    caps = {key: getattr(args, key) for key in ("max_n", "max_vertices", "max_N", "max_m", "format", "parallelism", "timing")}
    return load_config(args.config, **caps)


def _cmd_verify(args, out) -> int:
    if args.suite == "yt":
        if args.n is None or args.k is None:
            raise UsageError("verify yt needs --n and --k")
        rep = yt_inequalities(args.n, args.k)
        fmt = args.format or "text"
        if fmt == "json":
            out.write(json.dumps(_jsonable({"n": rep.n, "k": rep.k, "checked": rep.checked, "witnesses": rep.witnesses, "passed": rep.passed}), indent=2, sort_keys=True) + "\n")
        else:
            for key, count in sorted(rep.checked.items()):
                out.write(f"{key}: {count} instances\n")
            for w in rep.witnesses:
                out.write(f"FAIL {w}\n")
            out.write("PASSED\n" if rep.passed else "FAILED\n")
        return EXIT_OK if rep.passed else EXIT_FAIL
    cfg = _config(args)
    try:
        report = run_suite(args.suite, cfg)
    except KeyError as e:
        raise UsageError(e.args[0]) from e
    out.write(report.to_json() if cfg.format == "json" else report.to_text())
    return report.exit_code()


def _cmd_report(args, out) -> int:
    cfg = _config(args)
    try:
        report = run_suite(args.suite, cfg)
    except KeyError as e:
        raise UsageError(e.args[0]) from e
    Path(args.out).write_text(report.to_json())
    out.write(f"wrote {args.out}: {'PASSED' if report.passed else 'FAILED'}\n")
    return report.exit_code()


def _inject_input(args) -> str:
    if args.input is not None:
        return args.input
    if args.which == "reflection" and None not in (args.n, args.k, args.set):
        body = "" if args.set.strip() in ("", "-") else args.set
        return f"{args.n}:{{{body}}},k={args.k}"
    if args.which == "chain" and None not in (args.n, args.set):
        body = "" if args.set.strip() in ("", "-") else args.set
        return f"{args.n}:{{{body}}}"
    if args.which == "krattenthaler" and args.graph and args.blue is not None and args.green is not None:
        G = _read_graph(args.graph)
        edges = ",".join(f"{u}-{v}" for u, v in G.edges)
        return f"{G.V}:{edges}|{args.blue or '-'}|{args.green or '-'}"
    if args.which == "rsk" and args.perm is not None:
        return args.perm
    raise UsageError(f"inject {args.which}: give --input or the injection's flags")


def _cmd_scd(args, out) -> int:
    scd = scd_parenthesization(args.n) if args.algo == "paren" else scd_inductive(args.n)
    for chain in scd.chains:
        out.write(" < ".join(str(s) for s in chain) + "\n")
    out.write(f"{len(scd.chains)} chains\n")
    return EXIT_OK


def _cmd_rsk(args, out) -> int:
    Pt, Qt = rsk(parse_permutation(args.perm))
    out.write(f"P = {Pt.to_text()}\nQ = {Qt.to_text()}\n")
    return EXIT_OK


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        if args.command == "compute":
            value = _compute(args)
            if args.format == "json":
                out.write(json.dumps({"quantity": args.quantity, "value": _jsonable(value)}, sort_keys=True) + "\n")
            else:
                out.write(f"{value}\n")
            return EXIT_OK
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "report":
            return _cmd_report(args, out)
        if args.command == "inject":
            out.write(trace_injection(args.which, _inject_input(args)))
            return EXIT_OK
        if args.command == "scd":
            return _cmd_scd(args, out)
        if args.command == "rsk":
            return _cmd_rsk(args, out)
    except (UsageError, TraceInputError, ValueError, ArithmeticError) as e:
        print(f"combineq: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
