"""Slow, definition-level counters used to cross-check the fast paths.

Nothing here shares code with the algorithms it checks.
"""
from __future__ import annotations

from itertools import combinations, combinations_with_replacement, permutations, product
from typing import Sequence


def binomial_bruteforce(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return sum(1 for _ in combinations(range(n), k))


def alternating_permutations_bruteforce(n: int) -> int:
    """Permutations w of [n] with w1 < w2 > w3 < ..."""
    return sum(
        1 for w in permutations(range(n))
        if all((w[i] < w[i + 1]) == (i % 2 == 0) for i in range(n - 1))
    )


def partitions_bruteforce(n: int) -> int:
    """Count multisets of positive integers summing to n by trying every
    multiplicity vector."""
    def rec(part: int, left: int) -> int:
        if left == 0:
            return 1
        if part == 0:
            return 0
        return sum(rec(part - 1, left - m * part) for m in range(left // part + 1))

    return rec(n, n)


def p_box_bruteforce(n: int, k: int, ell: int) -> int:
    """Weakly decreasing k-tuples with entries in 0..n-k summing to ell."""
    return sum(1 for t in combinations_with_replacement(range(n - k + 1), k) if sum(t) == ell)


def kostka_bruteforce(shape: Sequence[int], weight: Sequence[int]) -> int:
    """Try every filling of the diagram with values 1..len(weight)."""
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    m = len(weight)
    count = 0
    for vals in product(range(1, m + 1), repeat=len(cells)):
        t = dict(zip(cells, vals))
        if any(vals.count(v) != weight[v - 1] for v in range(1, m + 1)):
            continue
        if all(t.get((i, j + 1), 10**9) >= t[(i, j)] and t.get((i + 1, j), 10**9) > t[(i, j)] for i, j in cells):
            count += 1
    return count


def lr_bruteforce(outer: Sequence[int], inner: Sequence[int], weight: Sequence[int]) -> int:
    """Every filling of outer/inner, filtered by semistandardness, content and
    the lattice condition on the row-reversed reading word."""
    inner = list(inner) + [0] * (len(outer) - len(inner))
    cells = [(i, j) for i in range(len(outer)) for j in range(inner[i], outer[i])]
    m = len(weight)
    if sum(weight) != len(cells):
        return 0
    count = 0
    for vals in product(range(1, m + 1), repeat=len(cells)):
        if any(vals.count(v) != weight[v - 1] for v in range(1, m + 1)):
            continue
        t = dict(zip(cells, vals))
        ok = all(t.get((i, j + 1), 10**9) >= v and t.get((i + 1, j), 10**9) > v for (i, j), v in t.items())
        if not ok:
            continue
        word = [t[(i, j)] for i in range(len(outer)) for j in range(outer[i] - 1, inner[i] - 1, -1)]
        seen = [0] * (m + 2)
        lattice = True
        for v in word:
            seen[v] += 1
            if v > 1 and seen[v] > seen[v - 1]:
                lattice = False
                break
        count += lattice
    return count


def forests_bruteforce(V: int, edges: Sequence[tuple[int, int]], k: int) -> int:
    """k-edge subsets with no cycle, detected by counting components."""
    count = 0
    for sub in combinations(edges, k):
        comp = {v: v for v in range(1, V + 1)}

        def root(x):
            while comp[x] != x:
                x = comp[x]
            return x

        merges = 0
        for u, v in sub:
            ru, rv = root(u), root(v)
            if ru != rv:
                comp[ru] = rv
                merges += 1
        count += merges == k
    return count
