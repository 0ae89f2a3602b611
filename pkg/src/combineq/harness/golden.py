"""Hand-checked small values, stored as data and recomputed on demand.

Each entry in ``golden.json`` names a quantity, its arguments and the frozen
value.  Integers are stored as decimal strings so the table round-trips
through any JSON reader.
"""
from __future__ import annotations

import json
from importlib import resources
from typing import Any, Callable

from ..boolean_lattice import (
    b_count,
    is_ballot_set,
    nested_injection,
    parse_subset,
    reflection_injection,
    scd_inductive,
    scd_parenthesization,
)
from ..characters import kronecker, kronecker_qbinom_identity, mn_character
from ..contingency import Margins, count_tables, majorization_check, rsk_kostka_identity, two_row_generating_function
from ..core import (
    binomial,
    class_size_z,
    conjugate,
    diagram_union_intersection,
    euler_number,
    fibonacci,
    format_partition,
    parse_partition,
    partitions,
)
from ..gaussian import c_difference, gaussian_binomial, p_box, partition_function
from ..graphs import (
    FreeMatroid,
    Graph,
    Matching,
    graphic_matroid,
    independent_count,
    krattenthaler_injection,
    matching_count,
    parse_edge_list,
)
from ..tableaux import (
    SkewShape,
    hook_inequality_check,
    hook_lengths,
    kostka,
    lr_coefficient,
    naruse_lower_bound,
    rsk,
    syt_count,
    syt_count_hlf,
)
from .report import Check, _jsonable

P = parse_partition


def _named_graph(name: str) -> Graph:
    kind, n = name[0], int(name[1:])
    return {"K": Graph.complete, "P": Graph.path, "C": Graph.cycle}[kind](n)


def _scd(n: int, algo: str):
    return scd_parenthesization(n) if algo == "paren" else scd_inductive(n)


def _chain_through(text: str, algo: str) -> list[str]:
    X = parse_subset(text)
    for chain in _scd(X.ambient, algo).chains:
        if X in chain:
            return [str(s) for s in chain]
    raise AssertionError(f"{X} in no chain")


def _krattenthaler(graph: str, blue: str, green: str) -> list[str]:
    G = _named_graph(graph)
    b, g = krattenthaler_injection(Matching(G, parse_edge_list(blue)), Matching(G, parse_edge_list(green)))
    return [b.to_text(), g.to_text()]


def _double_counting(mu: str, nu: str) -> list[int]:
    m, n = P(mu), P(nu)
    total = m.size + n.size
    lhs = sum(lr_coefficient(lam, m, n) * syt_count_hlf(lam) for lam in partitions(total))
    return [lhs, binomial(total, m.size) * syt_count_hlf(m) * syt_count_hlf(n)]


def _rsk(word: str) -> list[str]:
    Pt, Qt = rsk([int(x) for x in word.split(",")])
    return [Pt.to_text(), Qt.to_text()]


QUANTITIES: dict[str, Callable[..., Any]] = {
    "binomial": binomial,
    "conjugate": lambda lam: format_partition(conjugate(P(lam))),
    "union_intersection": lambda a, b: [format_partition(x) for x in diagram_union_intersection(P(a), P(b))],
    "class_size_z": lambda rho: class_size_z(P(rho)),
    "euler": euler_number,
    "fibonacci": fibonacci,
    "reflection": lambda X, k: str(reflection_injection(parse_subset(X), k)),
    "ballot": lambda X: is_ballot_set(parse_subset(X)),
    "b_count": b_count,
    "scd_chain_count": lambda n, algo: len(_scd(n, algo).chains),
    "scd_chain_through": _chain_through,
    "scd_chains": lambda n, algo: [[str(s) for s in c] for c in _scd(n, algo).chains],
    "nested": lambda X, algo: str(nested_injection(parse_subset(X), _scd(parse_subset(X).ambient, algo))),
    "pbox": p_box,
    "qbinom": lambda n, k: " ".join(map(str, gaussian_binomial(n, k).coeffs)),
    "cdiff": c_difference,
    "partitions": partition_function,
    "hooks": lambda lam: [[i, j, h] for (i, j), h in sorted(hook_lengths(P(lam)).items())],
    "f": lambda lam: syt_count_hlf(P(lam)),
    "skew_f": lambda outer, inner: syt_count(SkewShape(P(outer), P(inner))),
    "naruse": lambda outer, inner: list(naruse_lower_bound(SkewShape(P(outer), P(inner)))),
    "hook_inequality": lambda tau: list(hook_inequality_check(P(tau))),
    "rsk": _rsk,
    "kostka": lambda lam, w: kostka(P(lam), P(w)),
    "lr": lambda lam, mu, nu: lr_coefficient(P(lam), P(mu), P(nu)),
    "character": lambda lam, rho: mn_character(P(lam), P(rho)),
    "kronecker": lambda a, b, c: kronecker(P(a), P(b), P(c)),
    "kronecker_qbinom": lambda n, k, ell: list(kronecker_qbinom_identity(n, k, ell)),
    "matchings": lambda g, k: matching_count(_named_graph(g), k),
    "krattenthaler": _krattenthaler,
    "free_independent": lambda n, k: independent_count(FreeMatroid(n), k),
    "forests": lambda g, k: independent_count(graphic_matroid(_named_graph(g)), k),
    "logconcavity_gaps": lambda seq: [
        b * b - a * c for a, b, c in zip(*(lambda s: (s, s[1:], s[2:]))([int(x) for x in seq.split(",")]))
    ],
    "tables": lambda a, b: count_tables(Margins(P(a), P(b))),
    "two_row": lambda a, k: list(two_row_generating_function(P(a), k)),
    "rsk_kostka": lambda a, b: list(rsk_kostka_identity(Margins(P(a), P(b)))),
    "majorization": lambda a, b, a2, b2: list(majorization_check(P(a), P(b), P(a2), P(b2))),
    "double_counting": _double_counting,
}


def load_golden() -> list[dict]:
    text = resources.files(__package__).joinpath("golden.json").read_text()
    return json.loads(text)["entries"]


def evaluate(entry: dict) -> Any:
    return QUANTITIES[entry["quantity"]](*entry["args"])


def golden_checks() -> list[Check]:
    out = []
    for e in load_golden():
        got = _jsonable(evaluate(e))
        out.append(Check(f"golden.{e['id']}", {"quantity": e["quantity"], "args": e["args"]}, got, _jsonable(e["value"]), "=="))
    return out
