from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tensorcap.capacity import (
    ONE,
    CapacityValue,
    NeighborhoodProfile,
    OutOfRegime,
    Trichotomy,
    a_ratio,
    a_star,
    binding_from_a,
    capacity_trichotomy,
    min_plus,
    neighborhood_profile,
    tensor_capacity_cograph,
)
from tensorcap.generators import SplitMix64, complete, complete_multipartite, cycle, random_cograph, random_cotree, star
from tensorcap.graph import Graph, categorical_product, disjoint_union, join
from tensorcap.oracle import brute_a, brute_a_star, brute_profile
from tensorcap.recognition import CotreeNode, Cotree, build_cotree, realize


def profile_of(G):
    return neighborhood_profile(build_cotree(G))


def test_profile_examples():
    assert profile_of(Graph(1)).table == (0, 0)
    k2_k1 = disjoint_union(complete(2), Graph(1))
    assert profile_of(k2_k1).table == (0, 0, 1) == tuple(brute_profile(k2_k1))
    assert profile_of(star(3)).table == (0, 1, 1, 1) == tuple(brute_profile(star(3)))


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_a_of_complete_graph(n):
    P = profile_of(complete(n))
    assert P.table == (0, n - 1)
    assert a_ratio(P) == Fraction(1, n) == brute_a(complete(n))[0]


def test_a_of_star():
    P = profile_of(star(3))
    assert a_ratio(P) == Fraction(3, 4) == brute_a(star(3))[0]
    assert P.best_k() == 3


@pytest.mark.parametrize("parts", [(1,), (2, 3), (1, 1, 4), (2, 2, 2), (3, 1, 1, 1)])
def test_a_of_complete_multipartite(parts):
    G = complete_multipartite(*parts)
    assert a_ratio(profile_of(G)) == Fraction(max(parts), sum(parts))


def test_a_star_examples():
    assert a_star(Fraction(3, 4)) == ONE
    assert a_star(Fraction(1, 2)) == CapacityValue(CapacityValue.of(Fraction(1, 2)).kind, Fraction(1, 2))
    assert str(a_star(Fraction(1, 2))) == "1/2"
    assert str(a_star(Fraction(1, 7))) == "1/7"
    with pytest.raises(ValueError):
        a_star(Fraction(0))


def test_capacity_value_rejects_large_ratio():
    with pytest.raises(ValueError):
        CapacityValue(CapacityValue.of(Fraction(1, 3)).kind, Fraction(2, 3))


def test_capacity_examples():
    assert tensor_capacity_cograph(build_cotree(cycle(4))) == CapacityValue.of(Fraction(1, 2))
    assert tensor_capacity_cograph(build_cotree(Graph(1))) == ONE
    assert str(tensor_capacity_cograph(build_cotree(complete(2)))) == "1/2"
    assert tensor_capacity_cograph(build_cotree(star(3))) == ONE


def test_trichotomy_examples():
    assert capacity_trichotomy(star(3)) is Trichotomy.ONE
    assert capacity_trichotomy(cycle(5)) is Trichotomy.AT_MOST_HALF
    assert capacity_trichotomy(complete(2)) is Trichotomy.AT_MOST_HALF


def test_binding_examples():
    assert binding_from_a(Fraction(3, 4)) == Fraction(1, 3)
    assert binding_from_a(Fraction(2, 3)) == Fraction(1, 2)
    with pytest.raises(OutOfRegime):
        binding_from_a(Fraction(1, 2))


def test_min_plus():
    assert min_plus([0, 0], [0, 1]) == [0, 0, 1]
    assert min_plus([0, 3, 4], [0, 1]) == [0, 1, 4, 5]


@settings(max_examples=80)
@given(st.integers(1, 15), st.integers(0, 2**40))
def test_profile_matches_enumeration(n, seed):
    G = random_cograph(n, seed)
    P = profile_of(G)
    assert list(P.table) == brute_profile(G)
    assert a_ratio(P) == brute_a(G)[0]
    assert P.table[0] == 0
    assert all(P.table[k] <= P.table[k + 1] for k in range(P.alpha))
    assert all(P.table[k] <= n - k for k in range(P.alpha + 1))


def _shuffle(node: CotreeNode, rng: SplitMix64) -> CotreeNode:
    if node.is_leaf:
        return node
    kids = [_shuffle(c, rng) for c in node.children]
    rng.shuffle(kids)
    return CotreeNode(node.kind, children=tuple(kids))


def _binarise(node: CotreeNode) -> CotreeNode:
    # nest children pairwise; same graph, different fold
    if node.is_leaf:
        return node
    kids = [_binarise(c) for c in node.children]
    acc = kids[-1]
    for c in reversed(kids[:-1]):
        acc = CotreeNode(node.kind, children=(c, acc))
    return acc


def test_fold_order_does_not_matter():
    rng = SplitMix64(77)
    for seed in range(40):
        T = build_cotree(random_cograph(12, seed))
        expected = neighborhood_profile(T)
        shuffled = Cotree(_shuffle(T.root, rng), T.n)
        assert realize(shuffled) == realize(T)
        assert neighborhood_profile(shuffled) == expected
        assert neighborhood_profile(Cotree(_binarise(T.root), T.n)) == expected


@settings(max_examples=40)
@given(st.integers(1, 8), st.integers(0, 2**40))
def test_trichotomy_agrees_on_cographs(n, seed):
    T = random_cotree(n, seed)
    assert (capacity_trichotomy(realize(T)) is Trichotomy.ONE) == tensor_capacity_cograph(T).is_one


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 2**40), st.integers(0, 2**40))
def test_union_capacity_is_max(ng, nh, s1, s2):
    G, H = random_cograph(ng, s1), random_cograph(nh, s2)
    cu = tensor_capacity_cograph(build_cotree(disjoint_union(G, H)))
    cg, ch = tensor_capacity_cograph(build_cotree(G)), tensor_capacity_cograph(build_cotree(H))
    assert cu == max(cg, ch)
    assert cu.value == brute_a_star(categorical_product(G, H))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 2**40), st.integers(0, 2**40))
def test_product_a_bound(ng, nh, s1, s2):
    G, H = random_cograph(ng, s1), random_cograph(nh, s2)
    aG, aH = brute_a(G)[0], brute_a(H)[0]
    if aG <= Fraction(1, 2) or aH <= Fraction(1, 2):
        assert brute_a(categorical_product(G, H))[0] <= max(aG, aH)


def test_capacity_ordering():
    half = CapacityValue.of(Fraction(1, 2))
    third = CapacityValue.of(Fraction(1, 3))
    assert third < half < ONE
    assert max(third, ONE, half) == ONE
