"""Step-by-step text traces of the explicit injections.

Input forms:

* reflection:    ``4:{1},k=2``
* chain:         ``4:{2}`` (parenthesization successor)
* krattenthaler: ``V:edges|blue|green``, e.g. ``5:1-2,2-3,3-4,4-5|-|1-2,3-4``
* rsk:           ``3,1,2``
"""
from __future__ import annotations

import re

from ..boolean_lattice import (
    _match_parentheses,
    parenthesization_successor,
    parse_subset,
    reflection_injection,
    reflection_level,
)
from ..core import parse_permutation
from ..graphs import Graph, KrattenthalerTrace, Matching, krattenthaler_injection, parse_edge_list
from ..tableaux import RSKStep, rsk

INJECTIONS = ("reflection", "chain", "krattenthaler", "rsk")

_REFLECTION_RE = re.compile(r"^\s*(\d+\s*:\s*\{[^}]*\})\s*,\s*k\s*=\s*(\d+)\s*$")


class TraceInputError(ValueError):
    """Malformed trace input."""


def _reflection(text: str) -> list[str]:
    m = _REFLECTION_RE.match(text)
    if not m:
        raise TraceInputError(f"expected 'n:{{...}},k=K', got {text!r}")
    X, k = parse_subset(m.group(1)), int(m.group(2))
    try:
        Y = reflection_injection(X, k)
    except ValueError as e:
        raise TraceInputError(str(e)) from e
    ell = reflection_level(X)
    head = list(range(1, 2 * ell + 2))
    return [
        f"input    X = {X}, k = {k}",
        f"level    l = {ell}  (|X & [{2 * ell + 1}]| = {ell})",
        f"window   [{2 * ell + 1}] = {{{','.join(map(str, head))}}}",
        f"inside   X & window = {{{','.join(str(x) for x in X if x in head)}}}",
        f"output   psi(X) = {Y}",
    ]


def _chain(text: str) -> list[str]:
    try:
        X = parse_subset(text)
    except ValueError as e:
        raise TraceInputError(str(e)) from e
    n = X.ambient
    members = set(X.members)
    _, unmatched = _match_parentheses(members, n)
    word = "".join("(" if p in members else ")" for p in range(1, n + 1))
    # recover the pairs by rescanning; the helper only reports positions
    stack, pairs = [], []
    for p in range(1, n + 1):
        if p in members:
            stack.append(p)
        elif stack:
            pairs.append((stack.pop(), p))
    lines = [
        f"input     X = {X}",
        f"word      {word}",
        f"pairs     {' '.join(f'({a},{b})' for a, b in sorted(pairs)) or '-'}",
        f"unmatched {','.join(map(str, unmatched)) or '-'}",
    ]
    nxt = parenthesization_successor(X)
    if nxt is None:
        lines.append("output    X is the top of its chain")
    else:
        (added,) = set(nxt.members) - members
        lines.append(f"flip      {added}  (rightmost unmatched non-member)")
        lines.append(f"output    {nxt}")
    return lines


def _krattenthaler(text: str) -> list[str]:
    try:
        head, blue, green = text.split("|")
        V, edges = head.split(":", 1)
        G = Graph(int(V), parse_edge_list(edges))
        beta, gamma = Matching(G, parse_edge_list(blue)), Matching(G, parse_edge_list(green))
    except ValueError as e:
        raise TraceInputError(f"expected 'V:edges|blue|green': {e}") from e
    tr = KrattenthalerTrace()
    try:
        b2, g2 = krattenthaler_injection(beta, gamma, trace=tr)
    except ValueError as e:
        raise TraceInputError(str(e)) from e

    def el(es) -> str:
        return ",".join(f"{u}-{v}" for u, v in es) or "-"

    lines = [
        f"input     blue = {beta.to_text() or '-'}, green = {gamma.to_text() or '-'}",
        f"common    {el(tr.common)}",
    ]
    for c in tr.components:
        kind = "cycle" if c.is_cycle else f"path of length {c.length}"
        lines.append(f"component {{{','.join(map(str, c.vertices))}}}: {kind}, blue {el(c.blue)}, green {el(c.green)}")
    lines.append(f"odd paths {' '.join('{' + ','.join(map(str, c.vertices)) + '}' for c in tr.odd_paths) or '-'}")
    lines.append(f"blue-heavy positions {tr.blue_extra_before} -> {tr.blue_extra_after}")
    lines.append(f"recolored {','.join(map(str, tr.flipped)) or '-'}")
    lines.append(f"output    blue = {b2.to_text() or '-'}, green = {g2.to_text() or '-'}")
    return lines


def _rsk(text: str) -> list[str]:
    try:
        w = parse_permutation(text)
    except ValueError as e:
        raise TraceInputError(str(e)) from e
    steps: list[RSKStep] = []
    P, Q = rsk(w, trace=steps)
    lines = [f"input     w = {','.join(map(str, w))}"]
    for t, s in enumerate(steps, start=1):
        bumps = "; ".join(f"row {r}: {placed} bumps {out}" for r, placed, out in s.bumps) or "no bumps"
        lines.append(f"insert {s.letter}: {bumps}; new cell {s.new_cell} gets Q-entry {t}")
    lines.append(f"P = {P.to_text()}")
    lines.append(f"Q = {Q.to_text()}")
    return lines


def trace_injection(which: str, text: str) -> str:
    fn = {"reflection": _reflection, "chain": _chain, "krattenthaler": _krattenthaler, "rsk": _rsk}.get(which)
    if fn is None:
        raise TraceInputError(f"unknown injection {which!r}; choose from {', '.join(INJECTIONS)}")
    return "\n".join(fn(text)) + "\n"
