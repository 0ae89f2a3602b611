"""Irreducible characters of S_n and Kronecker coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

from .core import Partition, class_size_z, partitions
from .gaussian import c_difference

# Kronecker computations run over S_m; m above this is refused.
MAX_KRONECKER_SIZE = 12


def _rim_hook_removals(lam: tuple[int, ...], r: int) -> list[tuple[tuple[int, ...], int]]:
    """Partitions obtained by removing a border strip of length r, with heights.

    Works on beta-numbers: a strip of length r is a bead moved from x to x - r
    onto an empty position; the strip height is the number of beads jumped.
    """
    m = len(lam)
    beta = [lam[i] + (m - 1 - i) for i in range(m)]
    beads = set(beta)
    out = []
    for x in beta:
        y = x - r
        if y < 0 or y in beads:
            continue
        height = sum(1 for b in beta if y < b < x)
        new_beta = sorted((b if b != x else y for b in beta), reverse=True)
        new = tuple(b - (m - 1 - i) for i, b in enumerate(new_beta))
        out.append((tuple(p for p in new if p), height))
    return out


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1 if not lam else 0
    r, rest = rho[0], rho[1:]
    return sum((-1) ** h * _mn(mu, rest) for mu, h in _rim_hook_removals(lam, r))


def mn_character(lam: Sequence[int], rho: Sequence[int]) -> int:
    """chi^lam evaluated on the class of cycle type rho (Murnaghan-Nakayama)."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError(f"size mismatch: |{lam}| != |{rho}|")
    return _mn(tuple(lam), tuple(rho))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    shapes: tuple[Partition, ...]
    classes: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]  # values[row][col] = chi^shape(class)

    def __getitem__(self, key: tuple[Sequence[int], Sequence[int]]) -> int:
        lam, rho = key
        return self.values[self.shapes.index(Partition(lam))][self.classes.index(Partition(rho))]

    def column(self, rho: Sequence[int]) -> tuple[int, ...]:
        j = self.classes.index(Partition(rho))
        return tuple(row[j] for row in self.values)


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    parts = tuple(partitions(n))
    values = tuple(tuple(_mn(tuple(lam), tuple(rho)) for rho in parts) for lam in parts)
    return CharacterTable(n, parts, parts, values)


def kronecker(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Multiplicity of chi^lam in chi^mu * chi^nu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    n = lam.size
    if mu.size != n or nu.size != n:
        raise ValueError(f"size mismatch: {lam}, {mu}, {nu}")
    nfact = factorial(n)
    total = 0
    for rho in partitions(n):
        r = tuple(rho)
        term = _mn(tuple(lam), r) * _mn(tuple(mu), r) * _mn(tuple(nu), r)
        if term:
            total += term * (nfact // class_size_z(rho))
    g, rem = divmod(total, nfact)
    if rem or g < 0:
        raise ArithmeticError(f"character sum {total}/{nfact} is not a nonnegative integer")
    return g


def kronecker_qbinom_identity(n: int, k: int, ell: int) -> tuple[int, int, bool]:
    """Compare C(n,k,ell) with g(rect, rect, (m-ell, ell)) where rect is the
    k x (n-k) rectangle and m = k(n-k)."""
    m = k * (n - k)
    if m > MAX_KRONECKER_SIZE:
        raise ValueError(f"k(n-k) = {m} exceeds the cap of {MAX_KRONECKER_SIZE}")
    diff = c_difference(n, k, ell)
    rect = Partition([n - k] * k)
    g = kronecker(rect, rect, (m - ell, ell))
    return diff, g, diff == g
