"""
Independence number of a product of splitgraphs
===============================================

Three families of candidate sets, each solved with bipartite matching.
"""

from collections import Counter

from tensorcap.generators import SplitMix64, random_splitgraph, star, complete
from tensorcap.graph import categorical_product
from tensorcap.oracle import brute_alpha
from tensorcap.product import alpha_product_splitgraphs
from tensorcap.recognition import split_partition

G, H = star(3), complete(3)
PG, PH = split_partition(G), split_partition(H)
print("star K1,3 split as S =", sorted(PG.S), "C =", sorted(PG.C))
res = alpha_product_splitgraphs(G, PG, H, PH)
print("alpha(K1,3 x K3) =", res.value, "attained in case", res.case_tag)

# Which case wins on random inputs, and does it always match brute force?
rng = SplitMix64(0)
tags = Counter()
for _ in range(200):
    G = random_splitgraph(rng.randint(1, 6), rng.random(), rng.next_u64())
    H = random_splitgraph(rng.randint(1, 5), rng.random(), rng.next_u64())
    res = alpha_product_splitgraphs(G, split_partition(G), H, split_partition(H))
    assert res.value == brute_alpha(categorical_product(G, H))
    tags[res.case_tag] += 1
print("winning case counts over 200 random pairs:", dict(tags))
