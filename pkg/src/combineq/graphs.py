"""Graphs, matchings, matroids, and the log-concavity checks around them.

Vertices are labelled 1..V.  An edge is a sorted pair ``(u, v)`` with u < v.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .boolean_lattice import Subset, reflection_injection
from .core import is_unimodal

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    V: int
    edges: tuple[Edge, ...]

    def __init__(self, V: int, edges: Iterable[Sequence[int]] = ()):
        es = [_edge(int(u), int(v)) for u, v in edges]
        if len(set(es)) != len(es):
            raise ValueError("repeated edge")
        for u, v in es:
            if u < 1 or v > V:
                raise ValueError(f"edge {(u, v)} outside vertices 1..{V}")
        object.__setattr__(self, "V", V)
        object.__setattr__(self, "edges", tuple(sorted(es)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(1, n + 1), 2))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, ((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a simple cycle needs at least 3 vertices")
        return cls(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])

    def to_text(self) -> str:
        lines = [f"{self.V} {len(self.edges)}"] + [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Read the "V E" header followed by E lines "u v"."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise ValueError("graph text must start with a 'V E' line")
    V, E = int(lines[0][0]), int(lines[0][1])
    body = lines[1:]
    if len(body) != E:
        raise ValueError(f"header announces {E} edges, found {len(body)}")
    return Graph(V, ((int(a), int(b)) for a, b in body))


def all_labeled_graphs(V: int) -> Iterator[Graph]:
    pairs = list(combinations(range(1, V + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(V, (p for i, p in enumerate(pairs) if mask >> i & 1))


# ---------------------------------------------------------------------------
# matchings


@dataclass(frozen=True)
class Matching:
    graph: Graph
    edges: tuple[Edge, ...]

    def __init__(self, graph: Graph, edges: Iterable[Sequence[int]] = ()):
        es = tuple(sorted(_edge(*e) for e in edges))
        present = set(graph.edges)
        for e in es:
            if e not in present:
                raise ValueError(f"{e} is not an edge of the graph")
        seen: set[int] = set()
        for u, v in es:
            if u in seen or v in seen:
                raise ValueError(f"edges {es} are not pairwise disjoint")
            seen.update((u, v))
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "edges", es)

    def __len__(self) -> int:
        return len(self.edges)

    def to_text(self) -> str:
        return ",".join(f"{u}-{v}" for u, v in self.edges)


def parse_edge_list(text: str) -> list[Edge]:
    text = text.strip()
    if not text or text == "-":
        return []
    out = []
    for tok in text.split(","):
        u, v = tok.split("-")
        out.append(_edge(int(u), int(v)))
    return out


def enumerate_matchings(G: Graph, k: int) -> Iterator[tuple[Edge, ...]]:
    """k-matchings of G as sorted edge tuples, in lexicographic order."""
    edges = G.edges

    def rec(start: int, used: frozenset[int], acc: list[Edge]):
        if len(acc) == k:
            yield tuple(acc)
            return
        for i in range(start, len(edges) - (k - len(acc)) + 1):
            u, v = edges[i]
            if u in used or v in used:
                continue
            acc.append(edges[i])
            yield from rec(i + 1, used | {u, v}, acc)
            acc.pop()

    if k < 0:
        return
    yield from rec(0, frozenset(), [])


def matching_count(G: Graph, k: int) -> int:
    return sum(1 for _ in enumerate_matchings(G, k))


def matching_numbers(G: Graph) -> list[int]:
    """[m_0, m_1, ...] up to the largest k with m_k > 0.

    Uses the deletion/contraction recursion on the lowest edge, memoized on the
    remaining edge set.
    """
    memo: dict[tuple[Edge, ...], list[int]] = {}

    def rec(edges: tuple[Edge, ...]) -> list[int]:
        if not edges:
            return [1]
        if edges in memo:
            return memo[edges]
        u, v = edges[0]
        without = rec(edges[1:])
        with_e = rec(tuple(e for e in edges[1:] if u not in e and v not in e))
        out = list(without) + [0] * max(0, len(with_e) + 1 - len(without))
        for i, c in enumerate(with_e):
            out[i + 1] += c
        memo[edges] = out
        return out

    return rec(G.edges)


@dataclass
class PathComponent:
    vertices: tuple[int, ...]
    blue: tuple[Edge, ...]
    green: tuple[Edge, ...]
    is_cycle: bool

    @property
    def length(self) -> int:
        return len(self.blue) + len(self.green)

    @property
    def extra(self) -> str | None:
        if len(self.blue) > len(self.green):
            return "blue"
        if len(self.green) > len(self.blue):
            return "green"
        return None


@dataclass
class KrattenthalerTrace:
    common: tuple[Edge, ...] = ()
    components: list[PathComponent] = field(default_factory=list)
    odd_paths: list[PathComponent] = field(default_factory=list)
    blue_extra_before: Subset | None = None
    blue_extra_after: Subset | None = None
    flipped: tuple[int, ...] = ()


def _components(blue: set[Edge], green: set[Edge]) -> list[PathComponent]:
    adj: dict[int, list[Edge]] = defaultdict(list)
    for e in blue | green:
        adj[e[0]].append(e)
        adj[e[1]].append(e)
    seen: set[int] = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        stack, verts, es = [start], set(), set()
        while stack:
            x = stack.pop()
            if x in verts:
                continue
            verts.add(x)
            for e in adj[x]:
                es.add(e)
                stack.extend(e)
        seen |= verts
        comps.append(
            PathComponent(
                vertices=tuple(sorted(verts)),
                blue=tuple(sorted(es & blue)),
                green=tuple(sorted(es & green)),
                is_cycle=all(len(adj[x]) == 2 for x in verts),
            )
        )
    return comps


def krattenthaler_injection(
    beta: Matching, gamma: Matching, trace: KrattenthalerTrace | None = None
) -> tuple[Matching, Matching]:
    """Map a (k-1)-matching and a (k+1)-matching to a pair of k-matchings.

    Odd paths of the symmetric difference are ordered by their smallest
    vertex; the positions of the blue-heavy ones form an (r-1)-subset of [2r],
    which the reflection injection sends to an r-subset.  Paths whose
    designation changes swap colours.
    """
    if beta.graph != gamma.graph:
        raise ValueError("matchings live on different graphs")
    if len(gamma) != len(beta) + 2:
        raise ValueError(f"need |gamma| = |beta| + 2, got {len(beta)} and {len(gamma)}")
    blue, green = set(beta.edges), set(gamma.edges)
    common = blue & green
    comps = _components(blue - common, green - common)
    odd = sorted((c for c in comps if not c.is_cycle and c.length % 2 == 1), key=lambda c: c.vertices[0])
    two_r = len(odd)
    before = Subset(two_r, (i for i, c in enumerate(odd, start=1) if c.extra == "blue"))
    # |green| - |blue| = 2 forces r+1 green-heavy and r-1 blue-heavy paths
    after = reflection_injection(before, two_r // 2)
    flipped = tuple(sorted(set(before.members) ^ set(after.members)))
    new_blue, new_green = set(blue), set(green)
    for pos in flipped:
        c = odd[pos - 1]
        new_blue = (new_blue - set(c.blue)) | set(c.green)
        new_green = (new_green - set(c.green)) | set(c.blue)
    if trace is not None:
        trace.common = tuple(sorted(common))
        trace.components = comps
        trace.odd_paths = odd
        trace.blue_extra_before = before
        trace.blue_extra_after = after
        trace.flipped = flipped
    G = beta.graph
    return Matching(G, new_blue), Matching(G, new_green)


# ---------------------------------------------------------------------------
# matroids


class Matroid:
    """Independence-oracle matroid on ground set {0, ..., size-1}."""

    def __init__(self, size: int):
        self.size = size

    def is_independent(self, subset: frozenset[int]) -> bool:
        raise NotImplementedError


class FreeMatroid(Matroid):
    def is_independent(self, subset):
        return True


class UniformMatroid(Matroid):
    def __init__(self, size: int, rank: int):
        super().__init__(size)
        self.rank = rank

    def is_independent(self, subset):
        return len(subset) <= self.rank


class GraphicMatroid(Matroid):
    """Edges of a graph; a set is independent when it spans a forest."""

    def __init__(self, graph: Graph):
        super().__init__(len(graph.edges))
        self.graph = graph

    def is_independent(self, subset):
        parent = {}

        def find(x):
            while parent.get(x, x) != x:
                x = parent[x]
            return x

        for i in subset:
            u, v = self.graph.edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True


def graphic_matroid(G: Graph) -> GraphicMatroid:
    return GraphicMatroid(G)


def independent_count(M: Matroid, k: int) -> int:
    if k < 0 or k > M.size:
        return 0
    return sum(1 for c in combinations(range(M.size), k) if M.is_independent(frozenset(c)))


def independent_counts(M: Matroid) -> list[int]:
    """[a_0, a_1, ...] up to the rank, growing independent sets one element at a time."""
    counts = [0] * (M.size + 1)

    def rec(current: frozenset[int], start: int):
        counts[len(current)] += 1
        for x in range(start, M.size):
            nxt = current | {x}
            if M.is_independent(nxt):
                rec(nxt, x + 1)

    rec(frozenset(), 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def matroid_axiom_violations(M: Matroid) -> list[str]:
    """Exhaustive hereditary and exchange checks; only sensible for small ground sets."""
    indep = [frozenset(c) for k in range(M.size + 1) for c in combinations(range(M.size), k)
             if M.is_independent(frozenset(c))]
    indep_set = set(indep)
    problems = []
    if frozenset() not in indep_set:
        problems.append("empty set dependent")
    for s in indep:
        for x in s:
            if s - {x} not in indep_set:
                problems.append(f"hereditary fails at {sorted(s)} minus {x}")
    for a in indep:
        for b in indep:
            if len(a) < len(b) and not any(a | {x} in indep_set for x in b - a):
                problems.append(f"exchange fails for {sorted(a)}, {sorted(b)}")
    return problems


# ---------------------------------------------------------------------------
# log-concavity


@dataclass
class LogConcavityReport:
    sequence: list[int]
    terms: list[tuple[int, int, bool]]  # (k, a_k^2 - a_{k-1} a_{k+1}, ok)
    log_concave: bool
    unimodal: bool


def logconcavity_report(seq: Sequence[int]) -> LogConcavityReport:
    seq = [int(x) for x in seq]
    terms = []
    for k in range(1, len(seq) - 1):
        d = seq[k] ** 2 - seq[k - 1] * seq[k + 1]
        terms.append((k, d, d >= 0))
    log_concave = all(ok for _, _, ok in terms)
    # positive sequences without internal zeros: log-concave implies unimodal
    pos = seq[:]
    while pos and pos[-1] == 0:
        pos.pop()
    while pos and pos[0] == 0:
        pos.pop(0)
    no_gaps = all(x > 0 for x in pos)
    prefix_lc = all(pos[k] ** 2 >= pos[k - 1] * pos[k + 1] for k in range(1, len(pos) - 1))
    return LogConcavityReport(seq, terms, log_concave, (no_gaps and prefix_lc) or is_unimodal(seq))
