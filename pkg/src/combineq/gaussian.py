"""Partitions in a box, Gaussian binomial coefficients and the partition function."""
from __future__ import annotations

import threading
from functools import lru_cache

from .core import IntPolynomial


@lru_cache(maxsize=None)
def _box(size: int, max_parts: int, max_part: int) -> int:
    # partitions of `size` with at most `max_parts` parts, each <= max_part
    if size == 0:
        return 1
    if max_parts == 0 or max_part == 0 or size > max_parts * max_part:
        return 0
    # either no part equals max_part, or remove one part equal to max_part
    return _box(size, max_parts, max_part - 1) + _box(size - max_part, max_parts - 1, max_part)


def p_box(n: int, k: int, ell: int) -> int:
    """Number of partitions of ``ell`` fitting in a k x (n-k) rectangle."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if ell < 0 or ell > k * (n - k):
        return 0
    return _box(ell, k, n - k)


def box_counts(n: int, k: int) -> list[int]:
    return [p_box(n, k, ell) for ell in range(k * (n - k) + 1)]


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> IntPolynomial:
    """q-binomial via [n,k] = [n-1,k] + q^(n-k) [n-1,k-1]."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return IntPolynomial([1])
    return gaussian_binomial(n - 1, k) + gaussian_binomial(n - 1, k - 1).shift(n - k)


def c_difference_unchecked(n: int, k: int, ell: int) -> int:
    return p_box(n, k, ell) - p_box(n, k, ell - 1)


def c_difference(n: int, k: int, ell: int) -> int:
    if not 0 <= k <= n or not 1 <= ell or 2 * ell > k * (n - k):
        raise ValueError(f"need 1 <= ell <= k(n-k)/2, got n={n}, k={k}, ell={ell}")
    return c_difference_unchecked(n, k, ell)


_P: list[int] = [1]
_P_LOCK = threading.Lock()


def partition_function(n: int) -> int:
    """p(n) from Euler's pentagonal number recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < len(_P):
        return _P[n]
    with _P_LOCK:
        _extend_partition_table(n)
    return _P[n]


def _extend_partition_table(n: int) -> None:
    while len(_P) <= n:
        m = len(_P)
        total, j = 0, 1
        while True:
            g = j * (3 * j - 1) // 2
            if g > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * _P[m - g]
            g2 = g + j
            if g2 <= m:
                total += sign * _P[m - g2]
            j += 1
        _P.append(total)


def partition_logconcavity_gap(n: int) -> int:
    """p(n)^2 - p(n-1) p(n+1)."""
    if n < 1:
        raise ValueError("n must be positive")
    return partition_function(n) ** 2 - partition_function(n - 1) * partition_function(n + 1)
