from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from combineq.core import Partition, dominance_leq, partitions
from combineq.oracles import kostka_bruteforce, lr_bruteforce
from combineq.tableaux import (
    RSKStep,
    SkewShape,
    Tableau,
    hook_inequality_check,
    hook_lengths,
    kostka,
    lr_coefficient,
    naruse_lower_bound,
    parse_tableau,
    rsk,
    rsk_inverse,
    syt_count,
    syt_count_hlf,
    syt_enumerate,
    yt_inequalities,
)


def shapes_upto(n):
    for size in range(n + 1):
        for outer in partitions(size):
            for inner_size in range(size + 1):
                for inner in partitions(inner_size):
                    if outer.contains(inner):
                        yield SkewShape(outer, inner)


def test_hook_lengths_examples():
    assert hook_lengths((2, 1)) == {(1, 1): 3, (1, 2): 1, (2, 1): 1}
    assert hook_lengths((2, 2)) == {(1, 1): 3, (1, 2): 2, (2, 1): 2, (2, 2): 1}


@pytest.mark.parametrize("lam,f", [((2, 2), 2), ((2, 1), 2), ((6,), 1), ((3, 2, 1), 16), ((), 1)])
def test_syt_count_hlf_examples(lam, f):
    assert syt_count_hlf(lam) == f


def test_skew_examples():
    assert syt_count(SkewShape((2, 1), (1,))) == 2
    assert syt_count(SkewShape((3, 2), (3, 2))) == 1
    with pytest.raises(ValueError):
        SkewShape((2,), (1, 1))


@pytest.mark.parametrize("shape", list(shapes_upto(6)), ids=str)
def test_three_syt_counters_agree(shape):
    tabs = syt_enumerate(shape)
    assert len(tabs) == syt_count(shape)
    assert all(t.is_standard() for t in tabs)
    if not shape.inner:
        assert len(tabs) == syt_count_hlf(shape.outer)


def test_enumeration_cap():
    with pytest.raises(ValueError, match="cap"):
        syt_enumerate(SkewShape((13,)))


def test_tableau_text_round_trip():
    t = parse_tableau(".,1,2/3")
    assert t.shape == SkewShape((3, 1), (1,))
    assert t.to_text() == ".,1,2/3"
    assert parse_tableau("1,1,2/2,3").weight() == (2, 2, 1)
    with pytest.raises(ValueError):
        parse_tableau("1/2,3")


def test_tableau_predicates():
    assert Tableau.from_rows([[1, 2], [3]]).is_standard()
    assert Tableau.from_rows([[1, 1], [2]]).is_semistandard()
    assert not Tableau.from_rows([[1, 1], [1]]).is_semistandard()


def test_naruse_examples():
    assert naruse_lower_bound(SkewShape((2, 1), (1,))) == (2, 1)
    num, den = naruse_lower_bound(SkewShape((3, 2), (1,)))
    assert Fraction(num, den) <= syt_count(SkewShape((3, 2), (1,)))


@pytest.mark.parametrize("shape", [s for s in shapes_upto(7)], ids=str)
def test_naruse_bound_holds(shape):
    num, den = naruse_lower_bound(shape)
    f = syt_count(shape)
    assert num <= f * den
    if not shape.inner:
        assert (num, den) == (f, 1)


def test_hook_inequality():
    assert hook_inequality_check((2, 1)) == (3, 4, True)
    assert hook_inequality_check((1,)) == (1, 1, True)
    assert all(hook_inequality_check(lam)[2] for n in range(10) for lam in partitions(n))


class TestRSK:
    def test_examples(self):
        P, Q = rsk((3, 1, 2))
        assert (P.to_text(), Q.to_text()) == ("1,2/3", "1,3/2")
        P, Q = rsk((1, 2, 3))
        assert P.rows == Q.rows == ((1, 2, 3),)

    def test_trace_records_bumps(self):
        steps: list[RSKStep] = []
        rsk((2, 1), trace=steps)
        assert steps[1].bumps == [(1, 1, 2)]
        assert steps[1].new_cell == (2, 1)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_bijection(self, n):
        seen = set()
        for w in permutations(range(1, n + 1)):
            P, Q = rsk(w)
            assert P.shape == Q.shape
            assert P.is_standard() and Q.is_standard()
            assert tuple(rsk_inverse(P, Q)) == w
            seen.add((P.rows, Q.rows))
        assert len(seen) == factorial(n)

    def test_inverse_transpose_symmetry(self):
        for w in permutations(range(1, 6)):
            P, Q = rsk(w)
            inv = tuple(sorted(range(1, 6), key=lambda i: w[i - 1]))
            P2, Q2 = rsk(inv)
            assert (P2.rows, Q2.rows) == (Q.rows, P.rows)

    def test_inverse_errors(self):
        P, _ = rsk((1, 2))
        Q, _ = rsk((2, 1))
        with pytest.raises(ValueError):
            rsk_inverse(P, Q)
        with pytest.raises(ValueError):
            rsk_inverse(Tableau.from_rows([[1, 1]]), P)


@pytest.mark.parametrize(
    "lam,mu,expected", [((2, 1), (1, 1, 1), 2), ((2,), (1, 1), 1), ((3, 2), (3, 2), 1), ((2, 2), (3, 1), 0)]
)
def test_kostka_examples(lam, mu, expected):
    assert kostka(lam, mu) == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_matches_enumeration(n):
    for lam in partitions(n):
        for mu in partitions(n):
            assert kostka(lam, mu) == kostka_bruteforce(lam, mu)


def test_kostka_weight_order_irrelevant():
    assert kostka((3, 2), (1, 2, 2)) == kostka((3, 2), (2, 2, 1))


def test_kostka_triangular():
    for lam in partitions(6):
        assert kostka(lam, lam) == 1
        for mu in partitions(6):
            if kostka(lam, mu):
                assert dominance_leq(mu, lam)


@pytest.mark.parametrize(
    "lam,mu,nu,expected", [((2, 1), (1,), (1, 1), 1), ((2, 2), (2, 1), (1,), 1), ((3, 1), (3, 1), (), 1), ((3, 2, 1), (2, 1), (2, 1), 2)]
)
def test_lr_examples(lam, mu, nu, expected):
    assert lr_coefficient(lam, mu, nu) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_lr_matches_enumeration_and_is_symmetric(n):
    for lam in partitions(n):
        for k in range(n + 1):
            for mu in partitions(k):
                if not lam.contains(mu):
                    continue
                for nu in partitions(n - k):
                    c = lr_coefficient(lam, mu, nu)
                    assert c == lr_bruteforce(lam, mu, nu)
                    assert c == lr_coefficient(lam, nu, mu)


def test_size_mismatch_errors():
    with pytest.raises(ValueError):
        kostka((2, 1), (2,))
    with pytest.raises(ValueError):
        lr_coefficient((2, 1), (1,), (1,))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_yt_inequalities_hold(nk):
    n, k = nk
    rep = yt_inequalities(n, k)
    assert rep.passed, rep.witnesses
    assert set(rep.checked) == {"f_squared", "lr_squared", "lr_union", "double_counting", "fkg"}


def test_yt_inequalities_scope():
    with pytest.raises(ValueError):
        yt_inequalities(10, 3)
    # the double-counting example: n=3, mu=(1), nu=(1,1): 2 + 1 = 3 * 1 * 1
    total = sum(lr_coefficient(lam, (1,), (1, 1)) * syt_count_hlf(lam) for lam in partitions(3))
    assert total == 3


def test_partition_type_passthrough():
    assert syt_count_hlf(Partition([1, 2])) == 2
