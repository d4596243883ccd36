import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from math import comb

from gasketlab import (
    DomainError,
    LabeledGraph,
    connected_components,
    decode,
    disjoint_union,
    encode,
    gnp_sample,
    induced_subgraph,
    is_ordered_occurrence,
    pair_at,
    pos,
)
from gasketlab import sierpinski
from gasketlab.rng import derive_seed

from conftest import nx_isomorphic


def test_encode_trivial_cases(k3, path3):
    assert encode(k3).bits == "111"
    assert encode(LabeledGraph.empty(3)).bits == "000"
    assert encode(path3).bits == "101"


def test_decode_trivial_cases(k3, path3):
    assert decode("111", 3) == k3
    assert decode("000", 3) == LabeledGraph.empty(3)
    assert decode("101", 3) == path3


def test_decode_length_mismatch_names_lengths():
    with pytest.raises(DomainError, match="3"):
        decode("1111", 3)


@given(st.integers(2, 12), st.data())
@settings(max_examples=60)
def test_codec_roundtrip_both_ways(n, data):
    bits = data.draw(st.text(alphabet="01", min_size=comb(n, 2), max_size=comb(n, 2)))
    g = decode(bits, n)
    assert encode(g).bits == bits
    assert decode(encode(g), n) == g


@given(st.integers(2, 30))
@settings(max_examples=30)
def test_pos_is_a_bijection(n):
    seen = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            p = pos(i, j, n)
            assert pair_at(p, n) == (i, j)
            seen.add(p)
    assert seen == set(range(1, comb(n, 2) + 1))


def test_graph_invariants_rejected():
    with pytest.raises(DomainError, match="self-loop"):
        LabeledGraph.from_edges(3, [(1, 1)])
    with pytest.raises(DomainError, match="out of range"):
        LabeledGraph.from_edges(3, [(1, 4)])
    # duplicate edges collapse to one
    assert LabeledGraph.from_edges(2, [(1, 2), (2, 1)]).edge_count == 1


def test_induced_subgraph_cases(k3, path3):
    assert induced_subgraph(LabeledGraph.complete(4), (1, 2, 3)) == k3
    assert induced_subgraph(path3, (1, 3)) == LabeledGraph.empty(2)
    with pytest.raises(DomainError):
        induced_subgraph(k3, (1, 5))


def test_induced_subgasket_is_isomorphic_to_generator():
    s3 = sierpinski.build(3)
    s2 = sierpinski.build(2)
    for subset in sierpinski.subgaskets(s3, 2):
        assert nx_isomorphic(induced_subgraph(s3.graph, subset), s2.graph)


def test_is_ordered_occurrence(k3, path3):
    assert is_ordered_occurrence(LabeledGraph.complete(4), (1, 2, 3), k3)
    assert not is_ordered_occurrence(path3, (1, 2, 3), k3)
    with pytest.raises(DomainError, match="size"):
        is_ordered_occurrence(k3, (1, 2), k3)


def test_occurrence_of_own_induced_subgraph_always_holds():
    g = gnp_sample(12, 0.5, 3)
    subset = (2, 3, 5, 8, 11)
    assert is_ordered_occurrence(g, subset, induced_subgraph(g, subset))


def test_connected_components_cases(k3):
    two_parts = LabeledGraph.from_edges(5, [(1, 2), (1, 3), (2, 3), (4, 5)])
    assert connected_components(two_parts) == ((1, 2, 3), (4, 5))
    assert connected_components(LabeledGraph.complete(6)) == (tuple(range(1, 7)),)
    assert connected_components(LabeledGraph.empty(4)) == ((1,), (2,), (3,), (4,))


def test_disjoint_union_cases(k3):
    u = disjoint_union(k3, LabeledGraph.complete(2))
    assert u.n == 5
    assert sorted(u.edges()) == [(1, 2), (1, 3), (2, 3), (4, 5)]
    assert disjoint_union(LabeledGraph.empty(2), LabeledGraph.empty(2)) == LabeledGraph.empty(4)


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 2**32))
@settings(max_examples=40)
def test_union_edge_additivity_and_components(n1, n2, seed):
    g1 = gnp_sample(n1, 0.4, seed)
    g2 = gnp_sample(n2, 0.6, seed + 1)
    u = disjoint_union(g1, g2)
    assert u.edge_count == g1.edge_count + g2.edge_count
    shifted = tuple(
        tuple(v + g1.n for v in comp) for comp in connected_components(g2)
    )
    assert connected_components(u) == connected_components(g1) + shifted


def test_gnp_endpoints():
    assert gnp_sample(5, 0.0, 99) == LabeledGraph.empty(5)
    assert gnp_sample(5, 1.0, 99) == LabeledGraph.complete(5)
    with pytest.raises(DomainError, match="probability"):
        gnp_sample(5, 1.5, 0)


def test_gnp_deterministic_and_seed_sensitive():
    assert gnp_sample(16, 0.5, 7) == gnp_sample(16, 0.5, 7)
    assert gnp_sample(16, 0.5, 7) != gnp_sample(16, 0.5, 8)


def test_gnp_mean_edges_matches_binomial_expectation():
    total = sum(
        gnp_sample(64, 0.5, derive_seed(0, "edges", i)).edge_count for i in range(1000)
    )
    mean = total / 1000
    assert abs(mean - 1008) / 1008 < 0.03
