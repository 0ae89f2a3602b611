"""Exact foundational types: partitions, integer polynomials, permutations and
a few integer sequences shared by the rest of the package.

Every count is a Python ``int``; nothing here touches floating point.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Input is normalized: zeros are dropped and parts are sorted in
    decreasing order.  Negative parts raise ``ValueError``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        return super().__new__(cls, sorted((x for x in parts if x), reverse=True))

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """0-based part lookup that reads missing parts as 0."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        """1-based (row, column) cells in row-major order."""
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield (i, j)

    def contains(self, other: Sequence[int]) -> bool:
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", ""):
        return Partition()
    return Partition(int(x) for x in text.split(","))


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(x) for x in lam) if len(lam) else "-"


def partitions(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, optionally bounded."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rem: int, cap: int, room: int, acc: list[int]):
        if rem == 0:
            yield Partition(acc)
            return
        if room == 0:
            return
        for x in range(min(rem, cap), 0, -1):
            if x * room < rem:
                break
            acc.append(x)
            yield from rec(rem - x, x, room - 1, acc)
            acc.pop()

    yield from rec(n, max_part, max_len, [])


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``a`` is dominated by ``b`` (every prefix sum of a is <= that of b)."""
    if sum(a) != sum(b):
        raise ValueError("incomparable sizes")
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa > sb:
            return False
    return True


def diagram_union_intersection(mu: Sequence[int], nu: Sequence[int]) -> tuple[Partition, Partition]:
    m = max(len(mu), len(nu))
    pad_mu = list(mu) + [0] * (m - len(mu))
    pad_nu = list(nu) + [0] * (m - len(nu))
    union = Partition(max(x, y) for x, y in zip(pad_mu, pad_nu))
    inter = Partition(min(x, y) for x, y in zip(pad_mu, pad_nu))
    return union, inter


def class_size_z(rho: Sequence[int]) -> int:
    """Centralizer order of a permutation with cycle type ``rho``."""
    z = 1
    for part, mult in Counter(rho).items():
        z *= part**mult * factorial(mult)
    return z


@lru_cache(maxsize=None)
def _entringer_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _entringer_row(n - 1)
    row = [0]
    for x in reversed(prev):
        row.append(row[-1] + x)
    return tuple(row)


def euler_number(n: int) -> int:
    """Number of alternating permutations of [n], via the boustrophedon triangle."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _entringer_row(n)[-1]


def fibonacci(n: int) -> int:
    """Fibonacci numbers indexed so that F(1) = 1, F(2) = 2."""
    if n < 1:
        raise ValueError("n must be positive")
    a, b = 1, 2
    for _ in range(n - 1):
        a, b = b, a + b
    return a


class Permutation(tuple):
    """One-line notation of a bijection on {1..n}."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        return super().__new__(cls, images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, w in enumerate(self, start=1):
            inv[w - 1] = i
        return Permutation(inv)


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    return Permutation(int(x) for x in text.split(",")) if text else Permutation(())


class IntPolynomial:
    """Dense polynomial in q with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        # the zero polynomial gets degree -1
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] - other[i] for i in range(n))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def shift(self, d: int) -> "IntPolynomial":
        """Multiply by q**d."""
        return IntPolynomial([0] * d + list(self.coeffs)) if self.coeffs else self

    def __call__(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms) if terms else "0"

    def to_text(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    @classmethod
    def from_text(cls, text: str) -> "IntPolynomial":
        return cls(int(x) for x in text.split())


def is_unimodal(seq: Sequence[int]) -> bool:
    i, n = 0, len(seq)
    while i + 1 < n and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < n and seq[i] >= seq[i + 1]:
        i += 1
    return i >= n - 1
