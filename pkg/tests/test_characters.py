from math import factorial

import pytest

from combineq.characters import MAX_KRONECKER_SIZE, character_table, kronecker, kronecker_qbinom_identity, mn_character
from combineq.core import Partition, class_size_z, conjugate, partitions
from combineq.tableaux import syt_count_hlf


@pytest.mark.parametrize(
    "lam,rho,value", [((1, 1), (2,), -1), ((2, 1), (1, 1, 1), 2), ((4,), (3, 1), 1), ((2, 1), (3,), -1), ((2, 2), (2, 2), 2)]
)
def test_character_values(lam, rho, value):
    assert mn_character(lam, rho) == value


def test_character_size_mismatch():
    with pytest.raises(ValueError):
        mn_character((2,), (1,))


@pytest.mark.parametrize("n", range(1, 9))
def test_table_orthogonality(n):
    t = character_table(n)
    nfact = factorial(n)
    for lam in t.shapes:
        assert t[lam, (1,) * n] == syt_count_hlf(lam)
        for mu in t.shapes:
            inner = sum(t[lam, r] * t[mu, r] * (nfact // class_size_z(r)) for r in t.classes)
            assert inner == (nfact if lam == mu else 0)
    for r in t.classes:
        for s in t.classes:
            dot = sum(a * b for a, b in zip(t.column(r), t.column(s)))
            assert dot == (class_size_z(r) if r == s else 0)


@pytest.mark.parametrize("n", range(1, 8))
def test_sign_twist(n):
    t = character_table(n)
    for lam in t.shapes:
        for rho in t.classes:
            sign = (-1) ** (n - len(rho))
            assert t[conjugate(lam), rho] == sign * t[lam, rho]


@pytest.mark.parametrize(
    "a,b,c,g", [((3,), (3,), (3,), 1), ((2,), (1, 1), (1, 1), 1), ((2, 2), (2, 2), (2, 2), 1), ((2, 1), (2, 1), (2, 1), 1)]
)
def test_kronecker_examples(a, b, c, g):
    assert kronecker(a, b, c) == g


@pytest.mark.parametrize("n", range(1, 6))
def test_kronecker_symmetry_and_trivial(n):
    parts = list(partitions(n))
    for a in parts:
        for b in parts:
            assert kronecker(a, b, (n,)) == (a == b)
            assert kronecker(a, b, (1,) * n) == (a == conjugate(b))
            for c in parts:
                g = kronecker(a, b, c)
                assert g == kronecker(b, a, c) == kronecker(a, c, b)


def test_kronecker_size_mismatch():
    with pytest.raises(ValueError):
        kronecker((2,), (2,), (1,))


@pytest.mark.parametrize("n,k,ell", [(4, 2, 2), (4, 2, 1), (6, 3, 2), (5, 2, 3), (7, 1, 3)])
def test_kronecker_qbinom_identity(n, k, ell):
    c, g, ok = kronecker_qbinom_identity(n, k, ell)
    assert ok and c == g


def test_kronecker_identity_cap():
    with pytest.raises(ValueError, match="cap"):
        kronecker_qbinom_identity(8, 4, 1)
    assert MAX_KRONECKER_SIZE >= 10


def test_character_table_is_cached():
    assert character_table(6) is character_table(6)
    assert character_table(6).shapes == tuple(Partition(p) for p in partitions(6))
