"""Counting contingency tables with fixed margins."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .core import IntPolynomial, Partition, dominance_leq, is_unimodal, partitions
from .tableaux import kostka

MAX_DP_TOTAL = 30
MAX_ENUMERATION_TOTAL = 14
MAX_KOSTKA_TOTAL = 10


@dataclass(frozen=True)
class Margins:
    a: Partition
    b: Partition

    def __post_init__(self):
        object.__setattr__(self, "a", Partition(self.a))
        object.__setattr__(self, "b", Partition(self.b))
        if self.a.size != self.b.size:
            raise ValueError(f"row sums {self.a.size} != column sums {self.b.size}")

    @property
    def N(self) -> int:
        return self.a.size

    def transpose(self) -> "Margins":
        return Margins(self.b, self.a)


def _group_fills(groups: Sequence[tuple[int, int]], amount: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Ways to put ``amount`` into columns grouped as (residual, multiplicity).

    Yields (new residual multiset, number of labelled fillings).  Columns in a
    group are interchangeable, so each multiset of amounts is generated once
    and weighted by its multinomial coefficient.
    """
    if not groups:
        if amount == 0:
            yield (), 1
        return
    (r, c), rest = groups[0], groups[1:]
    capacity_rest = sum(rr * cc for rr, cc in rest)

    def pick(v: int, slots: int, left: int, chosen: list[int]):
        # chosen: amounts already assigned in this group, non-increasing
        if slots == 0 or v < 0:
            if slots == 0 and left <= capacity_rest:
                yield chosen[:], left
            return
        for cnt in range(slots, -1, -1):
            if cnt * v > left:
                continue
            chosen.extend([v] * cnt)
            yield from pick(v - 1, slots - cnt, left - cnt * v, chosen)
            del chosen[len(chosen) - cnt :]

    for amounts, left in pick(min(r, amount), c, amount, []):
        if len(amounts) < c:
            continue
        weight = factorial(c)
        for m in Counter(amounts).values():
            weight //= factorial(m)
        new_here = tuple(r - x for x in amounts)
        for tail, w in _group_fills(rest, left):
            yield new_here + tail, weight * w


@lru_cache(maxsize=None)
def _count(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    if not rows:
        return 1 if not cols else 0
    if len(rows) == 1:
        return 1  # last row is forced to equal the residual columns
    groups = tuple(sorted(Counter(cols).items(), reverse=True))
    total = 0
    for residual, weight in _group_fills(groups, rows[0]):
        nxt = tuple(sorted((x for x in residual if x), reverse=True))
        total += weight * _count(rows[1:], nxt)
    return total


def count_tables(margins: Margins) -> int:
    """T(a, b): nonnegative integer matrices with row sums a and column sums b."""
    if margins.N > MAX_DP_TOTAL:
        raise ValueError(f"N = {margins.N} exceeds the cap of {MAX_DP_TOTAL}")
    a, b = margins.a, margins.b
    # fewer rows means a shallower recursion
    if len(b) < len(a):
        a, b = b, a
    return _count(tuple(a), tuple(b))


def count_tables_bruteforce(margins: Margins) -> int:
    """Cell-by-cell enumeration; an independent oracle for small N."""
    if margins.N > MAX_ENUMERATION_TOTAL:
        raise ValueError(f"N = {margins.N} exceeds the enumeration cap of {MAX_ENUMERATION_TOTAL}")
    a, b = list(margins.a), list(margins.b)
    m, n = len(a), len(b)
    cols = b[:]

    def row(i: int, j: int, left: int) -> int:
        if j == n - 1:
            if left > cols[j]:
                return 0
            cols[j] -= left
            out = row(i + 1, 0, a[i + 1]) if i + 1 < m else int(all(c == 0 for c in cols))
            cols[j] += left
            return out
        total = 0
        for x in range(min(left, cols[j]) + 1):
            cols[j] -= x
            total += row(i, j + 1, left - x)
            cols[j] += x
        return total

    if m == 0:
        return 1 if n == 0 else 0
    return row(0, 0, a[0])


def majorization_check(a, b, a2, b2) -> tuple[int, int, bool]:
    """(T(a,b), T(a2,b2), T(a,b) <= T(a2,b2)) for a2 dominated by a, b2 by b."""
    a, b, a2, b2 = (Partition(x) for x in (a, b, a2, b2))
    if not (a.size == b.size == a2.size == b2.size):
        raise ValueError("margins must share one total")
    if not (dominance_leq(a2, a) and dominance_leq(b2, b)):
        raise ValueError("margins not comparable")
    lhs, rhs = count_tables(Margins(a, b)), count_tables(Margins(a2, b2))
    return lhs, rhs, lhs <= rhs


def rsk_kostka_identity(margins: Margins) -> tuple[int, int, bool]:
    if margins.N > MAX_KOSTKA_TOTAL:
        raise ValueError(f"N = {margins.N} exceeds the cap of {MAX_KOSTKA_TOTAL}")
    t = count_tables(margins)
    s = sum(kostka(lam, margins.a) * kostka(lam, margins.b) for lam in partitions(margins.N))
    return t, s, t == s


def two_row_product(a: Sequence[int], top_offset: int = 0) -> IntPolynomial:
    """prod over i of (1 + q + ... + q^(a_i + top_offset))."""
    out = IntPolynomial([1])
    for x in a:
        out = out * IntPolynomial([1] * (x + top_offset + 1))
    return out


def two_row_generating_function(a: Sequence[int], k: int) -> tuple[int, int, bool]:
    """Compare T(a, (N-k, k)) with the q^k coefficient of prod (1 + ... + q^a_i).

    Row i of such a table is (a_i - y_i, y_i) with 0 <= y_i <= a_i and
    sum y_i = k, so each factor runs up to q^a_i.
    """
    a = Partition(a)
    N = a.size
    if not 0 <= 2 * k <= N:
        raise ValueError(f"need 0 <= 2k <= N, got k={k}, N={N}")
    t = count_tables(Margins(a, (N - k, k)))
    coeff = two_row_product(a)[k]
    return t, coeff, t == coeff


def all_margin_pairs(N: int, max_len: int) -> list[tuple[Partition, Partition]]:
    parts = list(partitions(N, max_len=max_len))
    return [(a, b) for a in parts for b in parts]


def product_is_unimodal(a: Sequence[int]) -> bool:
    return is_unimodal(two_row_product(a).coeffs)
