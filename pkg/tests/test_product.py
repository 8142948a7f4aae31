import pytest
from hypothesis import given, settings, strategies as st

from tensorcap.generators import (
    SplitMix64,
    complete,
    complete_multipartite,
    random_cograph,
    random_splitgraph,
    star,
)
from tensorcap.graph import Graph, categorical_product, disjoint_union, join
from tensorcap.capacity import neighborhood_profile
from tensorcap.oracle import brute_alpha
from tensorcap.product import alpha_product_cographs, alpha_product_splitgraphs, verify_certificate
from tensorcap.recognition import (
    InvalidPartition,
    SplitPartition,
    all_split_partitions,
    build_cotree,
    split_partition,
)


def cog(G, H):
    return alpha_product_cographs(build_cotree(G), build_cotree(H))


def spl(G, H):
    return alpha_product_splitgraphs(G, split_partition(G), H, split_partition(H))


def sized_pair(rng, cap=30):
    ng = rng.randint(1, 10)
    nh = rng.randint(1, max(1, cap // ng))
    return ng, nh


def test_complete_pair():
    assert cog(complete(3), complete(4)).value == 4


def test_single_vertex_factor():
    H = random_cograph(7, seed=3)
    res = cog(Graph(1), H)
    assert res.value == 7 and res.certificate == frozenset(range(7))


def test_join_takes_best_block():
    # P3 = K1 x 2K1 against K2: the blocks give 2, 4, 3, 3 and the product
    # is two disjoint P3's, so the answer is the largest block
    P3 = join(Graph(1), Graph(2))
    assert brute_alpha(categorical_product(P3, complete(2))) == 4
    assert cog(P3, complete(2)).value == 4


def test_cograph_pairs_match_oracle():
    rng = SplitMix64(11)
    for trial in range(120):
        ng, nh = sized_pair(rng)
        G = random_cograph(ng, rng.next_u64())
        H = random_cograph(nh, rng.next_u64())
        res = cog(G, H)
        assert res.value == brute_alpha(categorical_product(G, H))
        assert len(res.certificate) == res.value
        assert verify_certificate(G, H, res.certificate)


@settings(max_examples=50)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 2**40), st.integers(0, 2**40))
def test_cograph_symmetry_and_lower_bound(ng, nh, s1, s2):
    G, H = random_cograph(ng, s1), random_cograph(nh, s2)
    a = cog(G, H).value
    assert a == cog(H, G).value
    assert a >= max(brute_alpha(G) * nh, brute_alpha(H) * ng)


@pytest.mark.parametrize("p, q", [((1, 2), (3,)), ((2, 2), (1, 3)), ((1, 1, 4), (2, 2, 2)), ((3, 1), (1, 1))])
def test_complete_multipartite_formula(p, q):
    G, H = complete_multipartite(*p), complete_multipartite(*q)
    expected = max(max(p) * sum(q), max(q) * sum(p))
    assert cog(G, H).value == expected == spl_or_none(G, H, expected)


def spl_or_none(G, H, fallback):
    # complete multipartite graphs are split only with at most one part of size > 1
    from tensorcap.recognition import is_split
    return spl(G, H).value if is_split(G) and is_split(H) else fallback


def test_certificate_verifier_rejects_edges():
    G = H = complete(2)
    assert verify_certificate(G, H, {0, 1})
    assert not verify_certificate(G, H, {0, 3})


@pytest.mark.parametrize("m, n", [(2, 2), (2, 5), (4, 3), (6, 6)])
def test_complete_split_pair_via_rows(m, n):
    res = spl(complete(m), complete(n))
    assert res.value == max(m, n)
    assert res.case_tag == "C"


def test_edgeless_factor():
    G = Graph(4)
    H = random_splitgraph(6, 0.5, seed=9)
    assert spl(G, H).value == 24
    no_clique = SplitPartition(frozenset(range(4)), frozenset())
    res = alpha_product_splitgraphs(G, no_clique, H, split_partition(H))
    assert res.value == 24 and res.case_tag == "A"


def test_star_times_triangle():
    G, H = star(3), complete(3)
    assert spl(G, H).value == brute_alpha(categorical_product(G, H))


def test_splitgraph_pairs_match_oracle():
    rng = SplitMix64(5)
    for trial in range(120):
        ng, nh = sized_pair(rng)
        G = random_splitgraph(ng, rng.random(), rng.next_u64())
        H = random_splitgraph(nh, rng.random(), rng.next_u64())
        res = spl(G, H)
        assert res.value == brute_alpha(categorical_product(G, H))
        assert verify_certificate(G, H, res.certificate)
        assert res.value == spl(H, G).value


def test_split_result_independent_of_partition():
    rng = SplitMix64(8)
    for trial in range(40):
        G = random_splitgraph(rng.randint(1, 6), 0.5, rng.next_u64())
        H = random_splitgraph(rng.randint(1, 5), 0.5, rng.next_u64())
        values = {
            alpha_product_splitgraphs(G, PG, H, PH).value
            for PG in all_split_partitions(G)
            for PH in all_split_partitions(H)
        }
        assert len(values) == 1


def test_invalid_partition_rejected():
    G = star(3)
    bad = SplitPartition(frozenset({0}), frozenset({1, 2, 3}))
    with pytest.raises(InvalidPartition):
        alpha_product_splitgraphs(G, bad, G, split_partition(G))


def test_every_case_tag_occurs():
    rng = SplitMix64(1)
    tags = set()
    for _ in range(200):
        G = random_splitgraph(rng.randint(1, 6), 0.5, rng.next_u64())
        H = random_splitgraph(rng.randint(1, 5), 0.5, rng.next_u64())
        tags.add(spl(G, H).case_tag)
    assert tags == {"A", "B", "C"}


def test_larger_cograph_pair_runs_fast():
    G = disjoint_union(random_cograph(40, 1), complete(10))
    H = random_cograph(60, 2)
    res = cog(G, H)
    assert verify_certificate(G, H, res.certificate)
    alpha_h = neighborhood_profile(build_cotree(H)).alpha
    assert res.value >= alpha_h * G.n
