from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from combineq.core import binomial
from combineq.graphs import (
    FreeMatroid,
    Graph,
    KrattenthalerTrace,
    Matching,
    UniformMatroid,
    all_labeled_graphs,
    enumerate_matchings,
    graphic_matroid,
    independent_count,
    independent_counts,
    krattenthaler_injection,
    logconcavity_report,
    matching_count,
    matching_numbers,
    matroid_axiom_violations,
    parse_edge_list,
    parse_graph,
)
from combineq.oracles import forests_bruteforce


@st.composite
def graphs(draw, max_v=7):
    V = draw(st.integers(1, max_v))
    pairs = list(combinations(range(1, V + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(V, chosen)


def test_graph_text_round_trip():
    G = Graph.cycle(5)
    assert parse_graph(G.to_text()) == G
    with pytest.raises(ValueError):
        parse_graph("3 2\n1 2\n")
    with pytest.raises(ValueError):
        Graph(3, [(1, 4)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 2), (2, 1)])


def test_matching_validation():
    G = Graph.path(4)
    assert Matching(G, parse_edge_list("1-2,3-4")).to_text() == "1-2,3-4"
    with pytest.raises(ValueError):
        Matching(G, [(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        Matching(G, [(1, 3)])
    assert parse_edge_list("-") == []


@pytest.mark.parametrize("G,k,m", [(Graph.complete(4), 2, 3), (Graph.complete(6), 3, 15), (Graph.path(5), 0, 1), (Graph.path(5), 2, 3)])
def test_matching_counts(G, k, m):
    assert matching_count(G, k) == m


def test_complete_graph_perfect_matchings_are_double_factorials():
    df = 1
    for n in range(1, 6):
        df *= 2 * n - 1
        assert matching_count(Graph.complete(2 * n), n) == df


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_recursion_matches_enumeration(G):
    seq = matching_numbers(G)
    assert seq == [sum(1 for _ in enumerate_matchings(G, k)) for k in range(len(seq))]
    assert logconcavity_report(seq).log_concave


def test_krattenthaler_module_example():
    G = Graph.path(5)
    tr = KrattenthalerTrace()
    b, g = krattenthaler_injection(Matching(G), Matching(G, [(1, 2), (3, 4)]), trace=tr)
    assert (b.to_text(), g.to_text()) == ("1-2", "3-4")
    assert str(tr.blue_extra_before) == "2:{}" and str(tr.blue_extra_after) == "2:{1}"


def test_krattenthaler_preconditions():
    G = Graph.complete(4)
    with pytest.raises(ValueError):
        krattenthaler_injection(Matching(G, [(1, 2)]), Matching(G, [(3, 4)]))
    with pytest.raises(ValueError):
        krattenthaler_injection(Matching(G), Matching(Graph.complete(5), [(1, 2), (3, 4)]))


@pytest.mark.parametrize("V", range(1, 5))
def test_krattenthaler_injective_on_labeled_graphs(V):
    for G in all_labeled_graphs(V):
        seq = matching_numbers(G)
        for k in range(1, len(seq) - 1):
            images = set()
            pairs = 0
            for b in enumerate_matchings(G, k - 1):
                for g in enumerate_matchings(G, k + 1):
                    nb, ng = krattenthaler_injection(Matching(G, b), Matching(G, g))
                    assert len(nb) == len(ng) == k
                    assert sorted(nb.edges + ng.edges) == sorted(b + g)
                    images.add((nb.edges, ng.edges))
                    pairs += 1
            assert len(images) == pairs


class TestMatroids:
    def test_free_and_uniform(self):
        assert independent_count(FreeMatroid(5), 2) == 10
        assert independent_counts(FreeMatroid(6)) == [binomial(6, k) for k in range(7)]
        assert independent_counts(UniformMatroid(6, 2)) == [1, 6, 15]

    def test_graphic_examples(self):
        assert independent_count(graphic_matroid(Graph.complete(3)), 2) == 3
        assert independent_counts(graphic_matroid(Graph.complete(4))) == [1, 6, 15, 16]

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_v=5))
    def test_graphic_matches_oracle(self, G):
        counts = independent_counts(graphic_matroid(G))
        assert counts == [forests_bruteforce(G.V, G.edges, k) for k in range(len(counts))]
        assert logconcavity_report(counts).log_concave

    @pytest.mark.parametrize("M", [FreeMatroid(4), UniformMatroid(5, 3), graphic_matroid(Graph.complete(4))], ids=["free", "uniform", "K4"])
    def test_axioms(self, M):
        assert matroid_axiom_violations(M) == []

    def test_axioms_catch_a_non_matroid(self):
        class Broken(FreeMatroid):
            def is_independent(self, subset):
                return subset in (frozenset(), frozenset({0, 1}))

        assert matroid_axiom_violations(Broken(2))


@pytest.mark.parametrize(
    "seq,lc,uni",
    [([1, 6, 3], True, True), ([1, 1, 2], False, True), ([1, 0, 1], False, False), ([0, 1, 2, 1], True, True), ([2], True, True)],
)
def test_logconcavity_report(seq, lc, uni):
    rep = logconcavity_report(seq)
    assert (rep.log_concave, rep.unimodal) == (lc, uni)


def test_logconcavity_terms():
    assert logconcavity_report([1, 6, 3]).terms == [(1, 33, True)]
